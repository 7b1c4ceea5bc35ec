//! The Frobenius-preimage iteration.
//!
//! With `D` a nonzerodivisor in the conductor, the closure is `V = U / D`
//! for the ideal `U = D * R̄` of `R`. Starting from `U_0 = R`, each step
//! keeps the elements of `U_e` whose `p`-th power lies in `D^(p-1) U_e`:
//!
//! ```text
//! U_{e+1} = U_e ∩ { r : r^p ∈ D^(p-1) U_e }
//! ```
//!
//! The chain is descending and its first repeated term is `D * R̄`.

use std::sync::Arc;

use crate::conductor::{
    conductor_candidate, is_nonzerodivisor, split, user_conductor, ConductorData, Presentation,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring};

pub const DEFAULT_MAX_ITER: usize = 64;

/// `{ r : r^p ∈ L }` for a lifted ideal `L ⊇ P`, returned together with
/// `P`.
///
/// Tag variables `y_i` stand for `x_i^p`. Over the prime field
/// `r(x)^p = r(x^p)`, so `r(y)` lies in `L + (y_i - x_i^p)` exactly when
/// `r^p ∈ L`. Eliminating the `x` block and renaming `y_i` back to `x_i`
/// gives the preimage.
pub fn frobenius_preimage(pres: &Presentation, l: &Ideal) -> Result<Ideal> {
    if !l.contains_ideal(pres.ideal())? {
        return Err(Error::NotALift);
    }
    let ring = pres.ring();
    if l.is_unit()? {
        return Ok(Ideal::unit(ring));
    }
    let n = ring.nvars();
    let p = ring.characteristic();
    let mut names: Vec<String> = ring.vars().to_vec();
    names.extend((1..=n).map(|i| format!("@y{i}")));
    let big = Ring::new(ring.modulus(), names);
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();

    let mut gens: Vec<Polynomial> = l
        .groebner_basis(MonomialOrder::Grevlex)?
        .iter()
        .map(|g| g.embed(&big, &xs))
        .collect();
    for i in 0..n {
        let y = Polynomial::var(&big, n + i);
        let xp = Polynomial::var(&big, i).pow(p as u64);
        gens.push(&y - &xp);
    }
    let elim = Ideal::new(&big, gens)?.eliminate(n)?;
    let mut out: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| g.restrict(ring, &ys).expect("x block eliminated"))
        .collect();
    out.extend(pres.relations().iter().cloned());
    Ideal::new(ring, out)
}

/// One term `U_e` of the chain, with `L = D^(p-1) U_e + P`.
#[derive(Clone, Debug)]
pub struct ClosureState {
    pub e: usize,
    pub u: Ideal,
    pub l: Ideal,
}

impl ClosureState {
    /// `U_0 = R`.
    pub fn initial(pres: &Presentation, d: &Polynomial) -> Result<Self> {
        let u = Ideal::unit(pres.ring());
        let l = modulus_ideal(pres, d, &u)?;
        Ok(ClosureState { e: 0, u, l })
    }
}

fn modulus_ideal(pres: &Presentation, d: &Polynomial, u: &Ideal) -> Result<Ideal> {
    let dp = d.pow(pres.characteristic() as u64 - 1);
    let gens = u
        .groebner_basis(MonomialOrder::Grevlex)?
        .iter()
        .map(|g| pres.reduce(&(g * &dp)))
        .collect::<Result<Vec<_>>>()?;
    pres.lift(gens)
}

/// `U_{e+1} = U_e ∩ F^{-1}(D^(p-1) U_e + P)`.
pub fn closure_step(
    pres: &Presentation,
    d: &Polynomial,
    state: &ClosureState,
) -> Result<ClosureState> {
    let pre = frobenius_preimage(pres, &state.l)?;
    let u = state.u.intersect(&pre)?;
    let u = Ideal::new(
        pres.ring(),
        u.groebner_basis(MonomialOrder::Grevlex)?.to_vec(),
    )?;
    let l = modulus_ideal(pres, d, &u)?;
    Ok(ClosureState {
        e: state.e + 1,
        u,
        l,
    })
}

#[derive(Clone, Debug)]
pub struct ClosureOptions {
    /// Conductor element to use instead of a Jacobian minor.
    pub conductor: Option<Polynomial>,
    /// Maximum number of strict descents before giving up.
    pub max_iter: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            conductor: None,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

/// Closure of one (unsplit) ring: `R̄ = (1/D) * U_final`.
#[derive(Clone, Debug)]
pub struct ComponentResult {
    pub presentation: Presentation,
    pub conductor: ConductorData,
    pub u_final: Ideal,
    /// Generators of `U_final` modulo `P`; the first one is `D`.
    pub numerators: Vec<Polynomial>,
    /// Index `e` with `U_e = U_{e+1}`.
    pub iterations: usize,
    /// Reduced grevlex bases of `U_0, ..., U_e`.
    pub chain: Vec<Arc<Vec<Polynomial>>>,
    pub is_normal: bool,
}

impl ComponentResult {
    pub fn d(&self) -> &Polynomial {
        &self.conductor.d
    }
}

/// One entry per factor when the ring had to be split along a
/// zerodivisor, otherwise a single entry.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub components: Vec<ComponentResult>,
}

/// Integral closure of a reduced ring (reducedness is assumed, not
/// checked).
pub fn integral_closure(pres: &Presentation, opts: &ClosureOptions) -> Result<ClosureResult> {
    let cap = pres.relations().len() + 8;
    let mut components = Vec::new();
    close_component(
        pres,
        opts.conductor.as_ref(),
        opts.max_iter,
        0,
        cap,
        &mut components,
    )?;
    Ok(ClosureResult { components })
}

fn close_component(
    pres: &Presentation,
    d: Option<&Polynomial>,
    max_iter: usize,
    depth: usize,
    cap: usize,
    out: &mut Vec<ComponentResult>,
) -> Result<()> {
    let conductor = match d {
        Some(d) => user_conductor(pres, d)?,
        None => conductor_candidate(pres)?,
    };
    let d = conductor.d.clone();
    if !is_nonzerodivisor(pres, &d)? {
        if depth >= cap {
            return Err(Error::SplitDepthExceeded(cap));
        }
        let (a, b) = split(pres, &d)?;
        close_component(&a, None, max_iter, depth + 1, cap, out)?;
        return close_component(&b, None, max_iter, depth + 1, cap, out);
    }

    let mut state = ClosureState::initial(pres, &d)?;
    let mut chain = vec![state.u.groebner_basis(MonomialOrder::Grevlex)?];
    loop {
        let next = closure_step(pres, &d, &state)?;
        if next.u.equals(&state.u)? {
            break;
        }
        if next.e > max_iter {
            return Err(Error::IterationLimitExceeded(max_iter));
        }
        chain.push(next.u.groebner_basis(MonomialOrder::Grevlex)?);
        state = next;
    }
    let numerators = trim_with_seed(pres, &state.u, Some(&d))?;
    let is_normal = numerators.len() == 1;
    out.push(ComponentResult {
        presentation: pres.clone(),
        conductor,
        u_final: state.u,
        numerators,
        iterations: state.e,
        chain,
        is_normal,
    });
    Ok(())
}

/// A small generating set of `U` modulo `P`: the reduced grevlex basis,
/// minus elements of `P`, pruned greedily from the largest element down.
/// Deterministic, though not guaranteed minimal for inhomogeneous input.
pub fn trim_generators(pres: &Presentation, u: &Ideal) -> Result<Vec<Polynomial>> {
    trim_with_seed(pres, u, None)
}

/// As [`trim_generators`], with `seed` (an element of `U`) placed first
/// and never pruned.
fn trim_with_seed(
    pres: &Presentation,
    u: &Ideal,
    seed: Option<&Polynomial>,
) -> Result<Vec<Polynomial>> {
    let gb = u.groebner_basis(MonomialOrder::Grevlex)?;
    let mut cands = Vec::new();
    for g in gb.iter() {
        if !pres.is_zero(g)? {
            cands.push(g.clone());
        }
    }
    // reduced basis is already ascending in grevlex, which refines degree
    let mut list: Vec<Polynomial> = seed.into_iter().cloned().chain(cands).collect();
    let fixed = usize::from(seed.is_some());
    let mut k = list.len();
    while k > fixed {
        k -= 1;
        let others: Vec<Polynomial> = list
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| g.clone())
            .collect();
        if pres.lift(others)?.contains(&list[k])? {
            list.remove(k);
        }
    }
    if list.is_empty() {
        // U ⊆ P cannot happen for U ∋ D; keep the unit ideal convention
        list.push(Polynomial::one(pres.ring()));
    }
    Ok(list)
}

/// Whether `r` lies in the integral closure of the principal ideal `aR`,
/// tested as `D r^(p^i) ∈ (a^(p^i)) + P` for `0 <= i <= e + 1`, where `e`
/// is the stabilization index of a closure run with this `D`.
pub fn principal_closure_member(
    pres: &Presentation,
    d: &Polynomial,
    e: usize,
    a: &Polynomial,
    r: &Polynomial,
) -> Result<bool> {
    for i in 0..=(e as u32 + 1) {
        let lhs = d * &r.frobenius_iterate(i)?;
        let modulus = pres.lift(vec![a.frobenius_iterate(i)?])?;
        if !modulus.contains(&lhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
