//! Sparse distributed polynomials over F_p.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Modulus};
use crate::monomial::{Monomial, MonomialOrder};

/// Ambient polynomial ring F_p[x_1, ..., x_n].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    modulus: Modulus,
    vars: Vec<String>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(modulus: Modulus, vars: Vec<String>) -> RingRef {
        Arc::new(Ring { modulus, vars })
    }

    /// Convenience constructor: validates `p`, splits names on whitespace.
    pub fn with_vars(p: u64, names: &str) -> Result<RingRef> {
        Ok(Ring::new(
            Modulus::new(p)?,
            names.split_whitespace().map(str::to_owned).collect(),
        ))
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn characteristic(&self) -> u32 {
        self.modulus.get()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Terms are kept sorted in strictly descending grevlex order with no zero
/// coefficients, so equal polynomials have identical term vectors.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u32)>,
}

const CANONICAL: MonomialOrder = MonomialOrder::Grevlex;

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.modulus.reduce_signed(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), index, 1), 1)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: u32) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let c = ring.modulus.reduce(c as u64);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms; like monomials are combined.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let mut terms: Vec<_> = terms.into_iter().collect();
        let p = ring.modulus;
        terms.sort_by(|a, b| CANONICAL.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            let c = p.reduce(c as u64);
            match out.last_mut() {
                Some((last, acc)) if *last == m => *acc = p.add(*acc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already strictly descending in grevlex with nonzero reduced
    /// coefficients.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| CANONICAL.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, FieldElement)> {
        let (m, c) = if order == CANONICAL {
            self.terms.first()?
        } else {
            self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))?
        };
        Some((m, FieldElement::new(*c as i64, self.ring.modulus)))
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| CANONICAL.cmp(m, t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, 1))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, self.ring.modulus.neg(1)))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        // multiply by the shorter factor term by term; each partial product
        // is already sorted, so accumulation is a merge
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &short.terms {
            acc = acc.combine_scaled(long, *c, m);
        }
        Ok(acc)
    }

    /// `self + c * other`.
    fn combine(&self, other: &Polynomial, c: u32) -> Polynomial {
        let one = Monomial::one(self.ring.nvars());
        self.combine_scaled(other, c, &one)
    }

    /// `self + c * m * other`; multiplication by a monomial preserves the
    /// term order, so this is a single merge.
    pub(crate) fn combine_scaled(&self, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        let p = self.ring.modulus;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), p.mul(*d, c)))
            .filter(|(_, d)| *d != 0)
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((x, _)), Some((y, _))) => CANONICAL.cmp(x, y),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (x, cx) = a.next().unwrap();
                    let (_, cy) = b.next().unwrap();
                    let s = p.add(*cx, cy);
                    if s != 0 {
                        out.push((x.clone(), s));
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.ring.modulus;
        let c = p.reduce(c as u64);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), p.mul(*d, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), *d)).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^p`. Over the prime field the coefficients are fixed, so this
    /// only scales every exponent vector by `p`.
    pub fn frobenius_power(&self) -> Result<Polynomial> {
        self.frobenius_iterate(1)
    }

    /// `self^(p^i)`.
    pub fn frobenius_iterate(&self, i: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        let k = p.checked_pow(i).ok_or(Error::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.checked_scale(k)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        // scaling all exponents by k keeps grevlex order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let p = self.ring.modulus;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            let c = p.mul(*c, p.reduce(e as u64));
            if c == 0 {
                return None;
            }
            let mut exps: Vec<u32> = m.exponents().to_vec();
            exps[index] -= 1;
            Some((Monomial::from_exponents(exps), c))
        });
        Polynomial::from_terms(&self.ring, terms.collect::<Vec<_>>())
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ring.modulus.inv(c.value())),
        }
    }

    /// Move into `target`, sending variable `i` to `target` variable
    /// `positions[i]`.
    pub fn embed(&self, target: &RingRef, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.ring.nvars());
        assert_eq!(target.modulus, self.ring.modulus);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[positions[i]] += e;
            }
            (Monomial::from_exponents(exps), *c)
        });
        Polynomial::from_terms(target, terms.collect::<Vec<_>>())
    }

    /// Inverse of [`Polynomial::embed`]: variable `j` of `target` reads
    /// variable `positions[j]` of `self`. Returns `None` if `self` involves
    /// a variable outside `positions`.
    pub fn restrict(&self, target: &RingRef, positions: &[usize]) -> Option<Polynomial> {
        assert_eq!(positions.len(), target.nvars());
        let mut used = vec![false; self.ring.nvars()];
        for &i in positions {
            used[i] = true;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &x)| x > 0 && !used[i]) {
                return None;
            }
            terms.push((
                Monomial::from_exponents(positions.iter().map(|&i| e[i])),
                *c,
            ));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Exact division by `divisor`; `None` if it does not divide.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(same_ring(&self.ring, &divisor.ring));
        let (lm, lc) = divisor.terms.first()?;
        let p = self.ring.modulus;
        let lc_inv = p.inv(*lc);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = lm.divide_into(m)?;
            let qc = p.mul(*c, lc_inv);
            rem = rem.combine_scaled(divisor, p.neg(qc), &q);
            quotient.push((q, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Evaluate with every variable replaced by a field value.
    pub fn evaluate(&self, point: &[u32]) -> u32 {
        let p = self.ring.modulus;
        self.terms.iter().fold(0, |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(*c, |t, (&e, &x)| p.mul(t, p.pow(x, e as u64)));
            p.add(acc, v)
        })
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomials from different rings")
            }
        }

        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.modulus.neg(1))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Coefficients above `p/2` print as subtractions, so the output parses
/// back to the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let p = self.ring.characteristic();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if *c > p / 2 {
                (true, p - c)
            } else {
                (false, *c)
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
