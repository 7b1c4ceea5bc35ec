//! Conductor elements from Jacobian minors, and splitting along
//! zerodivisors.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{same_ring, Polynomial, RingRef};

/// `R = F_p[x_1..x_n] / P` with `P` generated by `relations`.
#[derive(Clone)]
pub struct Presentation {
    ring: RingRef,
    relations: Vec<Polynomial>,
    ideal: Ideal,
}

impl Presentation {
    /// Fails with [`Error::ZeroRing`] if the relations generate the unit
    /// ideal.
    pub fn new(ring: &RingRef, relations: Vec<Polynomial>) -> Result<Self> {
        let ideal = Ideal::new(ring, relations.clone())?;
        if ideal.is_unit()? {
            return Err(Error::ZeroRing);
        }
        Ok(Presentation {
            ring: ring.clone(),
            relations,
            ideal,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// The defining ideal `P`.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    /// Canonical representative of `f` modulo `P`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ideal.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        self.ideal.contains(f)
    }

    /// The ideal generated by `gens` and `P`.
    pub fn lift(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut all = gens;
        all.extend(self.relations.iter().cloned());
        Ideal::new(&self.ring, all)
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}]/({})",
            self.ring.characteristic(),
            self.ring.vars().join(","),
            self.relations
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConductorSource {
    /// Determinant of the submatrix on these relation rows and variable
    /// columns. When that minor is a nonzero constant, `d` is normalized
    /// to 1.
    JacobianMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    User,
}

#[derive(Clone, Debug)]
pub struct ConductorData {
    pub height: usize,
    pub jacobian: Vec<Vec<Polynomial>>,
    pub d: Polynomial,
    pub source: ConductorSource,
}

/// Matrix of partial derivatives: row `i` is the gradient of relation `i`.
pub fn jacobian(pres: &Presentation) -> Vec<Vec<Polynomial>> {
    let n = pres.ring.nvars();
    pres.relations
        .iter()
        .map(|f| (0..n).map(|j| f.derivative(j)).collect())
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of a square polynomial matrix: cofactor expansion for small
/// sizes, fraction-free (Bareiss) elimination above that.
pub fn determinant(ring: &RingRef, m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k if k <= 4 => {
            let mut acc = Polynomial::zero(ring);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(ring, &minor);
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
        _ => bareiss(ring, m.to_vec()),
    }
}

fn bareiss(ring: &RingRef, mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let k = a.len();
    let mut prev = Polynomial::one(ring);
    let mut negate = false;
    for piv in 0..k - 1 {
        if a[piv][piv].is_zero() {
            match (piv + 1..k).find(|&r| !a[r][piv].is_zero()) {
                Some(r) => {
                    a.swap(piv, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(ring),
            }
        }
        for i in piv + 1..k {
            for j in piv + 1..k {
                let num = &(&a[piv][piv] * &a[i][j]) - &(&a[i][piv] * &a[piv][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[piv][piv].clone();
    }
    let det = a[k - 1][k - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Scan the `h x h` Jacobian minors, `h = codim P`, in lexicographic order
/// of (row set, column set) and return the first one that is nonzero
/// modulo `P`. If any minor is a nonzero constant the ring is smooth and
/// `d = 1`.
pub fn conductor_candidate(pres: &Presentation) -> Result<ConductorData> {
    let h = pres.ideal.codim()?;
    let jac = jacobian(pres);
    let ring = &pres.ring;
    let mut first: Option<(Polynomial, Vec<usize>, Vec<usize>)> = None;
    for rows in combinations(jac.len(), h) {
        for cols in combinations(ring.nvars(), h) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let det = pres.reduce(&determinant(ring, &sub))?;
            if det.is_zero() {
                continue;
            }
            if det.is_constant() {
                return Ok(ConductorData {
                    height: h,
                    jacobian: jac,
                    d: Polynomial::one(ring),
                    source: ConductorSource::JacobianMinor { rows, cols },
                });
            }
            if first.is_none() {
                first = Some((det, rows.clone(), cols));
            }
        }
    }
    match first {
        Some((d, rows, cols)) => Ok(ConductorData {
            height: h,
            jacobian: jac,
            d,
            source: ConductorSource::JacobianMinor { rows, cols },
        }),
        None => Err(Error::ConductorNotFound(h)),
    }
}

/// Package a user-supplied conductor element after checking it is nonzero
/// in the ring. Membership in the conductor is trusted.
pub fn user_conductor(pres: &Presentation, d: &Polynomial) -> Result<ConductorData> {
    if !same_ring(d.ring(), &pres.ring) {
        return Err(Error::RingMismatch);
    }
    if pres.is_zero(d)? {
        return Err(Error::DZero);
    }
    Ok(ConductorData {
        height: pres.ideal.codim()?,
        jacobian: jacobian(pres),
        d: d.clone(),
        source: ConductorSource::User,
    })
}

/// True iff `(P : d) = P`, i.e. `d` annihilates nothing in `R`.
pub fn is_nonzerodivisor(pres: &Presentation, d: &Polynomial) -> Result<bool> {
    if pres.is_zero(d)? {
        return Err(Error::DZero);
    }
    if d.is_constant() {
        return Ok(true);
    }
    let colon = pres.ideal.quotient(&Ideal::principal(d))?;
    colon.equals(&pres.ideal)
}

/// For a zerodivisor `d`, the presentations of `R/I_1` and `R/I_2` with
/// `I_1 = (0 : d)` and `I_2 = (0 : I_1)`.
pub fn split(pres: &Presentation, d: &Polynomial) -> Result<(Presentation, Presentation)> {
    if is_nonzerodivisor(pres, d)? {
        return Err(Error::NotAZeroDivisor);
    }
    let i1 = pres.ideal.quotient(&Ideal::principal(d))?;
    let i2 = pres.ideal.quotient(&i1)?;
    Ok((pres.extend(&i1)?, pres.extend(&i2)?))
}

impl Presentation {
    /// `R / I` for a lifted ideal `I ⊇ P`: the old relations plus the
    /// basis elements of `I` that are new modulo `P`.
    fn extend(&self, lifted: &Ideal) -> Result<Presentation> {
        let mut rels = self.relations.clone();
        for g in lifted
            .groebner_basis(crate::monomial::MonomialOrder::Grevlex)?
            .iter()
        {
            if !self.ideal.contains(g)? {
                rels.push(g.clone());
            }
        }
        Presentation::new(&self.ring, rels)
    }
}
