//! Independent checks on a finished closure.
//!
//! For `f = n / D` the closure characterization `f^(p^i) ∈ (1/D) R` reads
//! `n^(p^i) ∈ D^(p^i - 1) R`, which is checked directly without going
//! through the iteration.

use std::fmt;

use crate::closure::{closure_step, ClosureResult, ClosureState, ComponentResult};
use crate::conductor::Presentation;
use crate::error::Result;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub component: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{tag} [{}] {}", c.component, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs, per component: fixed point, integrality witnesses, closure under
/// multiplication, and presence of the unit fraction.
pub fn verify_result(res: &ClosureResult) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for (k, comp) in res.components.iter().enumerate() {
        verify_component(k, comp, &mut report)?;
    }
    Ok(report)
}

fn verify_component(
    k: usize,
    comp: &ComponentResult,
    report: &mut VerificationReport,
) -> Result<()> {
    let pres = &comp.presentation;
    let d = comp.d();
    let u = pres.lift(comp.numerators.clone())?;
    let mut push = |name, passed, detail: String| {
        report.checks.push(CheckOutcome {
            name,
            component: k,
            passed,
            detail,
        })
    };

    // (a) one more step leaves the module unchanged
    let l = {
        let dp = d.pow(pres.characteristic() as u64 - 1);
        pres.lift(comp.numerators.iter().map(|n| n * &dp).collect())?
    };
    let state = ClosureState {
        e: comp.iterations,
        u: u.clone(),
        l,
    };
    let next = closure_step(pres, d, &state)?;
    let fixed = next.u.equals(&u)?;
    push("fixed point", fixed, String::new());

    // (b) n^(p^i) ∈ D^(p^i - 1) R for i <= e
    let mut bad = Vec::new();
    for n in &comp.numerators {
        for i in 0..=comp.iterations as u32 {
            if !witness_holds(pres, d, n, i)? {
                bad.push(format!("{n} at i={i}"));
            }
        }
    }
    push("integrality witnesses", bad.is_empty(), bad.join("; "));

    // (c) products of fractions stay in the module
    let du = pres.lift(comp.numerators.iter().map(|n| n * d).collect())?;
    let mut bad = Vec::new();
    for (i, a) in comp.numerators.iter().enumerate() {
        for b in &comp.numerators[i..] {
            if !du.contains(&(a * b))? {
                bad.push(format!("({a})*({b})"));
            }
        }
    }
    push("ring closed", bad.is_empty(), bad.join("; "));

    // (d) 1 = D / D is a fraction of the module
    push("contains 1", u.contains(d)?, String::new());
    Ok(())
}

fn witness_holds(pres: &Presentation, d: &Polynomial, n: &Polynomial, i: u32) -> Result<bool> {
    let q = (pres.characteristic() as u64).pow(i);
    let power = pres.reduce(&n.frobenius_iterate(i)?)?;
    if power.is_zero() {
        return Ok(true);
    }
    let modulus = pres.lift(vec![d.pow(q - 1)])?;
    modulus.contains(&power)
}
