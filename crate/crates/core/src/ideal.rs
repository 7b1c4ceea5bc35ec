//! Ideals of a polynomial ring, with memoized reduced Gröbner bases.
//!
//! Ideals of a quotient ring `S/P` are always handled through their lifts:
//! an ideal of `S` that contains `P`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{normal_form, reduced_basis};
use crate::monomial::MonomialOrder;
use crate::poly::{same_ring, Polynomial, Ring, RingRef};

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>;

/// Generators in an ambient ring plus a per-order cache of reduced bases.
/// Clones share the cache.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Cache,
}

/// Name of the auxiliary variable adjoined for intersections. Not a valid
/// user identifier, so it cannot collide.
const TAG: &str = "@t";

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Cache::default(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: Cache::default(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            cache: Cache::default(),
        }
    }

    pub fn principal(f: &Polynomial) -> Self {
        Ideal {
            ring: f.ring().clone(),
            gens: if f.is_zero() {
                Vec::new()
            } else {
                vec![f.clone()]
            },
            cache: Cache::default(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced Gröbner basis under `order`, computed once per order.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        // computed outside the lock; a racing writer produces the same basis
        let gb = Arc::new(reduced_basis(&self.ring, &self.gens, order)?);
        Ok(self
            .cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert(gb)
            .clone())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(
            f,
            &self.groebner_basis(MonomialOrder::Grevlex)?,
            MonomialOrder::Grevlex,
        )
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via identical reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        let a = self.groebner_basis(MonomialOrder::Grevlex)?;
        let b = other.groebner_basis(MonomialOrder::Grevlex)?;
        Ok(a == b)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self
            .groebner_basis(MonomialOrder::Grevlex)?
            .first()
            .is_some_and(|g| g.is_one()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `f * I`.
    pub fn scale(&self, f: &Polynomial) -> Result<Ideal> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ideal::new(&self.ring, self.gens.iter().map(|g| g * f).collect())
    }

    /// Generators of `I ∩ F_p[x_{k+1}, ..., x_n]`, still expressed in the
    /// ambient ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        assert!(k <= self.ring.nvars(), "cannot eliminate {k} variables");
        if k == 0 {
            return Ok(self.clone());
        }
        let gb = self.groebner_basis(MonomialOrder::Block(k))?;
        let gens = gb
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
            })
            .cloned()
            .collect();
        Ideal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![TAG.to_owned()];
        names.extend(self.ring.vars().iter().cloned());
        let big = Ring::new(self.ring.modulus(), names);
        let positions: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        gens.extend(self.gens.iter().map(|f| &f.embed(&big, &positions) * &t));
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| &g.embed(&big, &positions) * &one_minus_t),
        );
        let elim = Ideal::new(&big, gens)?.eliminate(1)?;
        let back: Vec<usize> = (1..=n).collect();
        let gens = elim
            .gens
            .iter()
            .map(|g| {
                g.restrict(&self.ring, &back)
                    .expect("tag variable eliminated")
            })
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// Colon ideal `I : J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::QuotientByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// `I : (g)` as `(I ∩ (g)) / g`.
    fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_constant() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&Ideal::principal(g))?;
        let gens = meet
            .gens
            .iter()
            .map(|h| h.div_exact(g).expect("element of (g) is divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `n - dim(S/I)`, with the dimension read off the grevlex initial
    /// ideal as the largest set of variables containing no leading monomial.
    pub fn codim(&self) -> Result<usize> {
        let gb = self.groebner_basis(MonomialOrder::Grevlex)?;
        if gb.first().is_some_and(|g| g.is_one()) {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        let supports: Vec<u64> = gb
            .iter()
            .map(|g| {
                support_bits(
                    g.leading_term(MonomialOrder::Grevlex)
                        .unwrap()
                        .0
                        .exponents(),
                )
            })
            .collect();
        Ok(n - max_independent_set(n, &supports))
    }
}

fn support_bits(exps: &[u32]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1 << i))
}

/// Largest subset of `0..n` that contains the support of no leading
/// monomial.
fn max_independent_set(n: usize, supports: &[u64]) -> usize {
    fn go(var: usize, n: usize, chosen: u64, size: usize, supports: &[u64], best: &mut usize) {
        if size + (n - var) <= *best {
            return;
        }
        if var == n {
            *best = size;
            return;
        }
        let with = chosen | (1 << var);
        if supports.iter().all(|s| s & !with != 0) {
            go(var + 1, n, with, size + 1, supports, best);
        }
        go(var + 1, n, chosen, size, supports, best);
    }
    assert!(n <= 64, "codimension supports at most 64 variables");
    let mut best = 0;
    go(0, n, 0, 0, supports, &mut best);
    best
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.gens.iter().map(|g| g.to_string()))
            .finish()
    }
}
