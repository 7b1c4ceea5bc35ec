//! Buchberger's algorithm over F_p.
//!
//! Polynomials are converted into [`Row`]s, term vectors sorted in
//! descending order under the working [`MonomialOrder`], and converted back
//! at the end. Pair management follows Gebauer–Möller (coprime criterion
//! plus the chain criterion); pairs are selected by smallest lcm degree.

use std::cell::Cell;
use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::field::Modulus;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, RingRef};

static GB_CALLS: AtomicU64 = AtomicU64::new(0);
thread_local! {
    static PAIR_LIMIT: Cell<usize> = const { Cell::new(0) };
}

/// Number of Gröbner basis computations run so far in this process
/// (cache hits are not counted).
pub fn gb_calls() -> u64 {
    GB_CALLS.load(AtomicOrdering::Relaxed)
}

/// Cap on the number of critical pairs processed by a single basis
/// computation on the calling thread; `None` removes the cap. Exceeding
/// it is an error.
pub fn set_pair_limit(limit: Option<usize>) {
    PAIR_LIMIT.with(|c| c.set(limit.unwrap_or(0)));
}

/// Terms sorted strictly descending under the working order.
#[derive(Clone, Debug)]
struct Row {
    terms: Vec<(Monomial, u32)>,
    mask: u64,
}

impl Row {
    fn new(mut terms: Vec<(Monomial, u32)>, order: MonomialOrder) -> Row {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Row::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<(Monomial, u32)>) -> Row {
        let mask = terms.first().map_or(0, |(m, _)| m.support_mask());
        Row { terms, mask }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, p: Modulus) {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let inv = p.inv(c);
                for t in &mut self.terms {
                    t.1 = p.mul(t.1, inv);
                }
            }
        }
    }
}

/// `a[from..] - c * m * b`, where every term of `m * b` is at most
/// `a[from]`; terms before `from` are copied untouched.
fn sub_scaled(
    a: &[(Monomial, u32)],
    from: usize,
    b: &[(Monomial, u32)],
    c: u32,
    m: &Monomial,
    order: MonomialOrder,
    p: Modulus,
) -> Vec<(Monomial, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(&a[..from]);
    let neg = p.neg(c);
    let mut i = from;
    let mut j = 0;
    let mut pending: Option<Monomial> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && pending.is_none() {
            pending = Some(b[j].0.mul(m));
        }
        let ord = match (i < a.len(), &pending) {
            (true, Some(y)) => order.cmp(&a[i].0, y),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coef = p.mul(b[j].1, neg);
                out.push((pending.take().unwrap(), coef));
                j += 1;
            }
            Ordering::Equal => {
                let s = p.add(a[i].1, p.mul(b[j].1, neg));
                let mono = pending.take().unwrap();
                if s != 0 {
                    out.push((mono, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `f` against the rows of `basis` selected by `active`.
/// When `skip` is set that row is not used as a reducer.
fn reduce(
    f: Vec<(Monomial, u32)>,
    basis: &[Row],
    active: &[bool],
    skip: Option<usize>,
    order: MonomialOrder,
    p: Modulus,
) -> Vec<(Monomial, u32)> {
    let mut rem = f;
    let mut pos = 0;
    while pos < rem.len() {
        let (m, c) = (&rem[pos].0, rem[pos].1);
        let mmask = m.support_mask();
        let mut best: Option<(usize, Monomial)> = None;
        for (k, g) in basis.iter().enumerate() {
            if !active[k] || Some(k) == skip || g.mask & !mmask != 0 {
                continue;
            }
            if let Some(q) = g.lead().divide_into(m) {
                let better = match &best {
                    None => true,
                    Some((b, _)) => g.terms.len() < basis[*b].terms.len(),
                };
                if better {
                    best = Some((k, q));
                }
            }
        }
        match best {
            None => pos += 1,
            Some((k, q)) => {
                let g = &basis[k].terms;
                let lc_inv = p.inv(g[0].1);
                let factor = p.mul(c, lc_inv);
                rem = sub_scaled(&rem, pos, g, factor, &q, order, p);
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    order: MonomialOrder,
    p: Modulus,
    basis: Vec<Row>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    /// Gebauer–Möller update with new element at index `h`.
    fn update(&mut self, h: usize) {
        let lead_h = self.basis[h].lead().clone();
        let candidates: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.basis[g].lead();
                (g, lead_h.lcm(lg), lead_h.is_coprime(lg))
            })
            .collect();

        // chain criterion among the new pairs; a pair survives if it is
        // coprime or no other new pair has an lcm dividing its own
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, lcm, coprime)) in candidates.iter().enumerate() {
            let dominated = |other: &(usize, Monomial, bool)| other.1.divides(lcm);
            if *coprime
                || !(candidates[idx + 1..].iter().any(dominated) || kept.iter().any(dominated))
            {
                kept.push((*g, lcm.clone(), *coprime));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(g, lcm, _)| Pair { i: g, j: h, lcm })
            .collect();

        // old pairs made redundant by the new lead term
        let basis = &self.basis;
        self.pairs.retain(|pair| {
            if !lead_h.divides(&pair.lcm) {
                return true;
            }
            let li = lead_h.lcm(basis[pair.i].lead());
            let lj = lead_h.lcm(basis[pair.j].lead());
            li == pair.lcm || lj == pair.lcm
        });
        self.pairs.extend(fresh);

        for g in 0..h {
            if self.active[g] && lead_h.divides(self.basis[g].lead()) {
                self.active[g] = false;
            }
        }
    }

    fn insert(&mut self, mut row: Row) {
        row.make_monic(self.p);
        self.basis.push(row);
        self.active.push(true);
        self.update(self.basis.len() - 1);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Vec<(Monomial, u32)> {
        let f = &self.basis[pair.i].terms;
        let g = &self.basis[pair.j].terms;
        let mf = f[0].0.divide_into(&pair.lcm).unwrap();
        let mg = g[0].0.divide_into(&pair.lcm).unwrap();
        let left: Vec<(Monomial, u32)> = f[1..].iter().map(|(m, c)| (m.mul(&mf), *c)).collect();
        sub_scaled(&left, 0, &g[1..], 1, &mg, self.order, self.p)
    }

    fn run(&mut self) -> Result<()> {
        let limit = PAIR_LIMIT.with(Cell::get);
        let mut processed = 0usize;
        while let Some(pair) = self.next_pair() {
            processed += 1;
            if limit != 0 && processed > limit {
                return Err(Error::PairLimitExceeded(limit));
            }
            let s = self.s_polynomial(&pair);
            let r = reduce(s, &self.basis, &self.active, None, self.order, self.p);
            if !r.is_empty() {
                self.insert(Row::from_sorted(r));
            }
        }
        Ok(())
    }

    /// Interreduce the surviving elements into the reduced basis, sorted by
    /// ascending leading monomial.
    fn finish(mut self) -> Vec<Row> {
        let idx: Vec<usize> = (0..self.basis.len()).filter(|&k| self.active[k]).collect();
        for &k in &idx {
            let row = std::mem::take(&mut self.basis[k].terms);
            let (head, tail) = row.split_at(1);
            let mut reduced = head.to_vec();
            reduced.extend(reduce(
                tail.to_vec(),
                &self.basis,
                &self.active,
                Some(k),
                self.order,
                self.p,
            ));
            self.basis[k] = Row::from_sorted(reduced);
        }
        let mut out: Vec<Row> = idx.into_iter().map(|k| self.basis[k].clone()).collect();
        let order = self.order;
        out.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
        out
    }
}

fn to_rows(polys: &[Polynomial], order: MonomialOrder) -> Vec<Row> {
    polys
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| Row::new(f.terms().to_vec(), order))
        .collect()
}

fn to_poly(ring: &RingRef, row: Row) -> Polynomial {
    Polynomial::from_terms(ring, row.terms)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by ascending leading monomial under `order`. The zero ideal gives an
/// empty list.
pub fn reduced_basis(
    ring: &RingRef,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<Vec<Polynomial>> {
    GB_CALLS.fetch_add(1, AtomicOrdering::Relaxed);
    let p = ring.modulus();
    let mut engine = Engine {
        order,
        p,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut rows = to_rows(gens, order);
    // small leads first keeps early reducers cheap
    rows.sort_by(|a, b| {
        order
            .cmp(a.lead(), b.lead())
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
    });
    for row in rows {
        let r = reduce(row.terms, &engine.basis, &engine.active, None, order, p);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        engine.insert(Row::from_sorted(r));
    }
    engine.run()?;
    Ok(engine
        .finish()
        .into_iter()
        .map(|row| to_poly(ring, row))
        .collect())
}

/// Remainder of multivariate division of `f` by `divisors` under `order`:
/// no term of the result is divisible by a leading term of a divisor, and
/// `f` minus the result lies in the ideal they generate.
pub fn normal_form(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<Polynomial> {
    for g in divisors {
        if !crate::poly::same_ring(f.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let rows = to_rows(divisors, order);
    let active = vec![true; rows.len()];
    let p = f.ring().modulus();
    let r = reduce(
        Row::new(f.terms().to_vec(), order).terms,
        &rows,
        &active,
        None,
        order,
        p,
    );
    Ok(Polynomial::from_terms(f.ring(), r))
}

/// S-polynomial of `f` and `g` under `order` (leading coefficients
/// normalized to one).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let p = f.ring().modulus();
    let mut a = Row::new(f.terms().to_vec(), order);
    let mut b = Row::new(g.terms().to_vec(), order);
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(f.ring());
    }
    a.make_monic(p);
    b.make_monic(p);
    let engine = Engine {
        order,
        p,
        pairs: Vec::new(),
        active: vec![true, true],
        basis: vec![a.clone(), b.clone()],
    };
    let pair = Pair {
        i: 0,
        j: 1,
        lcm: a.lead().lcm(b.lead()),
    };
    Polynomial::from_terms(f.ring(), engine.s_polynomial(&pair))
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            if !normal_form(&s_polynomial(f, g, order), basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn lit(ring: &RingRef, s: &str) -> Polynomial {
        let mut acc = Polynomial::zero(ring);
        for term in s.split('+') {
            let mut t = Polynomial::one(ring);
            for factor in term.split('*').map(str::trim) {
                if let Ok(c) = factor.parse::<i64>() {
                    t = t.scale(ring.modulus().reduce_signed(c));
                } else {
                    let (name, e) = factor.split_once('^').unwrap_or((factor, "1"));
                    let i = ring.var_index(name).unwrap();
                    t = &t * &Polynomial::var(ring, i).pow(e.parse().unwrap());
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::with_vars(7, "x y").unwrap();
        let x = lit(&r, "x");
        assert!(
            normal_form(&x, std::slice::from_ref(&x), MonomialOrder::Grevlex)
                .unwrap()
                .is_zero()
        );
        let y = lit(&r, "y");
        assert_eq!(
            normal_form(&y, std::slice::from_ref(&x), MonomialOrder::Grevlex).unwrap(),
            y
        );
        let g = lit(&r, "x^2 + 6*y");
        assert_eq!(
            normal_form(&lit(&r, "x^2*y"), &[g], MonomialOrder::Grevlex).unwrap(),
            lit(&r, "y^2")
        );
        assert_eq!(normal_form(&y, &[], MonomialOrder::Grevlex).unwrap(), y);
    }

    #[test]
    fn linear_change_of_coordinates() {
        let r = Ring::with_vars(5, "x y").unwrap();
        let gb = reduced_basis(
            &r,
            &[lit(&r, "x + y"), lit(&r, "x + 4*y")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        assert_eq!(gb, vec![lit(&r, "y"), lit(&r, "x")]);
    }

    #[test]
    fn single_generator_is_made_monic() {
        let r = Ring::with_vars(3, "x y u v").unwrap();
        let f = lit(&r, "x^2*v + 2*y^2*u");
        let gb = reduced_basis(&r, std::slice::from_ref(&f), MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb, vec![f.scale(2)]);
    }

    #[test]
    fn twisted_cubic_lex() {
        // independent check: Buchberger criterion plus membership of inputs
        let r = Ring::with_vars(101, "x y z").unwrap();
        let f1 = lit(&r, "x^2 + 100*y");
        let f2 = lit(&r, "x^3 + 100*z");
        let gb = reduced_basis(&r, &[f1.clone(), f2.clone()], MonomialOrder::Lex).unwrap();
        let expected = vec![
            lit(&r, "y^3 + 100*z^2"),
            lit(&r, "x*z + 100*y^2"),
            lit(&r, "x*y + 100*z"),
            lit(&r, "x^2 + 100*y"),
        ];
        assert_eq!(gb, expected);
        assert!(is_groebner_basis(&expected, MonomialOrder::Lex).unwrap());
        for f in [&f1, &f2] {
            assert!(normal_form(f, &expected, MonomialOrder::Lex)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn unit_and_zero_ideals() {
        let r = Ring::with_vars(2, "x y").unwrap();
        let gb = reduced_basis(
            &r,
            &[lit(&r, "x + 1"), lit(&r, "x")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        assert_eq!(gb, vec![Polynomial::one(&r)]);
        assert!(
            reduced_basis(&r, &[Polynomial::zero(&r)], MonomialOrder::Grevlex)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn pair_limit_is_enforced() {
        let r = Ring::with_vars(101, "x y z").unwrap();
        set_pair_limit(Some(1));
        let res = reduced_basis(
            &r,
            &[lit(&r, "x^2 + 100*y"), lit(&r, "x^3 + 100*z")],
            MonomialOrder::Lex,
        );
        set_pair_limit(None);
        assert_eq!(res, Err(Error::PairLimitExceeded(1)));
    }
}
