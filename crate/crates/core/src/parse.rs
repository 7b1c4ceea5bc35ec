//! Recursive-descent reader for polynomial expressions.
//!
//! ```text
//! poly   := ['-'] term { ('+' | '-') term }
//! term   := coeff { '*' factor } | factor { '*' factor }
//! factor := var [ '^' nat ]
//! coeff  := nat
//! ```
//!
//! Whitespace between tokens is ignored. Coefficients are reduced modulo
//! the characteristic; columns in errors are 1-based character offsets.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, RingRef};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: &'a RingRef,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        column,
        message: message.into(),
    })
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Digits as a residue mod p, plus the exact value if it fits a u32.
    fn nat(&mut self) -> Result<(u32, Option<u32>)> {
        self.skip_ws();
        let start = self.pos;
        let p = self.ring.modulus();
        let mut residue = 0u32;
        let mut exact: Option<u32> = Some(0);
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            residue = p.reduce(residue as u64 * 10 + d as u64);
            exact = exact.and_then(|v| v.checked_mul(10)?.checked_add(d));
            self.pos += 1;
        }
        if self.pos == start {
            return err(start + 1, "expected a number");
        }
        Ok((residue, exact))
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            Some(c) => return err(start + 1, format!("unexpected '{c}'")),
            None => return err(start + 1, "unexpected end of input"),
        }
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Ok((start + 1, self.chars[start..self.pos].iter().collect()))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let (col, name) = self.ident()?;
        let Some(idx) = self.ring.var_index(&name) else {
            return err(col, format!("unknown variable '{name}'"));
        };
        let mut e = 1;
        if self.eat('^') {
            let col = self.column();
            e = match self.nat()?.1 {
                Some(v) => v,
                None => return err(col, "exponent overflow"),
            };
        }
        exps[idx] = match exps[idx].checked_add(e) {
            Some(v) => v,
            None => return err(col, "exponent overflow"),
        };
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut coeff = 1;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => coeff = self.nat()?.0,
            _ => self.factor(&mut exps)?,
        }
        while self.eat('*') {
            self.factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let p = self.ring.modulus();
        let mut terms = Vec::new();
        let mut negate = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { p.neg(c) } else { c }));
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        if let Some(c) = self.peek() {
            return err(self.column(), format!("unexpected '{c}'"));
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ring,
    };
    if parser.peek().is_none() {
        return err(1, "empty polynomial");
    }
    parser.poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use proptest::prelude::*;

    #[test]
    fn reads_example_relation() {
        let r = Ring::with_vars(2, "x y u v").unwrap();
        let f = parse_polynomial(&r, "x^2*v - y^2*u").unwrap();
        assert_eq!(f.to_string(), "y^2*u + x^2*v");
        let r5 = Ring::with_vars(5, "x y").unwrap();
        assert_eq!(
            parse_polynomial(&r5, "-x + 7*y*y - 12")
                .unwrap()
                .to_string(),
            "2*y^2 - x - 2"
        );
    }

    #[test]
    fn errors_carry_columns() {
        let r = Ring::with_vars(3, "x y").unwrap();
        let cases = [
            ("", 1),
            ("x + ", 5),
            ("x + z", 5),
            ("x y", 3),
            ("2x", 2),
            ("x^", 3),
            ("x^99999999999", 3),
        ];
        for (text, col) in cases {
            match parse_polynomial(&r, text) {
                Err(Error::Parse { column, .. }) => assert_eq!(column, col, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    proptest! {
        #[test]
        fn display_reparses(terms in proptest::collection::vec((0u32..7, 0u32..4, 0u32..4), 0..6)) {
            let r = Ring::with_vars(7, "x y z").unwrap();
            let f = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(c, a, b)| (Monomial::from_exponents([a, b, a + b]), c)),
            );
            prop_assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f);
        }
    }
}
