#![allow(dead_code)]

use fpnorm_core::{parse_polynomial, Ideal, Polynomial, Presentation, Ring, RingRef};

pub fn ring(p: u64, vars: &str) -> RingRef {
    Ring::with_vars(p, vars).unwrap()
}

pub fn poly(r: &RingRef, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

pub fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| poly(r, s)).collect()).unwrap()
}

pub fn pres(p: u64, vars: &str, rels: &[&str]) -> Presentation {
    let r = ring(p, vars);
    let rels = rels.iter().map(|s| poly(&r, s)).collect();
    Presentation::new(&r, rels).unwrap()
}

/// `F_p[x,y,u,v]/(x^2 v - y^2 u)`, the semigroup ring `F_p[x, y, x^2 t, y^2 t]`.
pub fn segre(p: u64) -> Presentation {
    pres(p, "x y u v", &["x^2*v - y^2*u"])
}

pub fn quartic(p: u64) -> Presentation {
    pres(p, "u v x y z", &["u^2*x^4 + u*v*y^4 + v^2*z^4"])
}

pub fn quadratic(p: u64) -> Presentation {
    let rel = format!("u^2*x^{p} + 2*u*v*y^{p} + v^2*z^{p}");
    pres(p, "u v x y z", &[rel.as_str()])
}

/// Two-sided ideal equality modulo the relations.
pub fn ideals_equal_mod(pres: &Presentation, a: Vec<Polynomial>, b: Vec<Polynomial>) -> bool {
    pres.lift(a)
        .unwrap()
        .equals(&pres.lift(b).unwrap())
        .unwrap()
}

/// Cross-multiplied module equality: `(1/d) N == (1/b) A` as submodules of
/// the fraction field iff `b N + P == d A + P`.
pub fn modules_equal(
    pres: &Presentation,
    d: &Polynomial,
    numerators: &[Polynomial],
    b: &Polynomial,
    other: &[Polynomial],
) -> bool {
    ideals_equal_mod(
        pres,
        numerators.iter().map(|n| n * b).collect(),
        other.iter().map(|a| a * d).collect(),
    )
}

/// Fractions in the total ring of fractions, used to build reference
/// generators.
#[derive(Clone, Debug)]
pub struct Frac {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Frac {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        Frac { num, den }
    }
    pub fn from(p: &Polynomial) -> Self {
        Frac::new(p.clone(), Polynomial::one(p.ring()))
    }
    pub fn add(&self, o: &Frac) -> Frac {
        Frac::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
    pub fn mul(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.num, &self.den * &o.den)
    }
    pub fn neg(&self) -> Frac {
        Frac::new(-&self.num, self.den.clone())
    }
    pub fn div(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.den, &self.den * &o.num)
    }
}

/// Put fractions over the product of their denominators.
pub fn common_denominator(fracs: &[Frac]) -> (Polynomial, Vec<Polynomial>) {
    let r = fracs[0].num.ring().clone();
    let mut den = Polynomial::one(&r);
    for f in fracs {
        den = &den * &f.den;
    }
    let nums = fracs
        .iter()
        .map(|f| {
            let others = fracs
                .iter()
                .filter(|g| !std::ptr::eq(*g, f))
                .fold(Polynomial::one(&r), |acc, g| &acc * &g.den);
            &f.num * &others
        })
        .collect();
    (den, nums)
}

/// Brute-force model of `F_p[x, y, x^2 t, y^2 t]` by exponent vectors in
/// `(x, y, t)`; no Gröbner machinery involved.
pub mod semigroup {
    pub type Exp = [i64; 3];

    /// Is `a` a sum of (1,0,0), (0,1,0), (2,0,1), (0,2,1)?
    pub fn contains(a: Exp) -> bool {
        let [i, j, k] = a;
        if i < 0 || j < 0 || k < 0 {
            return false;
        }
        (0..=k).any(|c| 2 * c <= i && 2 * (k - c) <= j)
    }

    /// Saturation: some positive multiple lies in the semigroup.
    pub fn saturated_contains(a: Exp) -> bool {
        (1..=6).any(|m| contains([m * a[0], m * a[1], m * a[2]]))
    }

    pub fn elements(max_deg: i64) -> Vec<Exp> {
        let mut out = Vec::new();
        for i in 0..=max_deg {
            for j in 0..=max_deg - i {
                for k in 0..=(i + j) {
                    if contains([i, j, k]) {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// Exponent of `x^a y^b u^c v^d` in `(x, y, t)`.
    pub fn image(exps: &[u32]) -> Exp {
        let e: Vec<i64> = exps.iter().map(|&v| v as i64).collect();
        [e[0] + 2 * e[2], e[1] + 2 * e[3], e[2] + e[3]]
    }

    /// Some `(a, b, c, d)` with [`image`] equal to `s`.
    pub fn representative(s: Exp) -> [u32; 4] {
        let [i, j, k] = s;
        let c = (0..=k).find(|c| 2 * c <= i && 2 * (k - c) <= j).unwrap();
        let d = k - c;
        [(i - 2 * c) as u32, (j - 2 * d) as u32, c as u32, d as u32]
    }

    pub fn sub(a: Exp, b: Exp) -> Exp {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }

    pub fn scale(m: i64, a: Exp) -> Exp {
        [m * a[0], m * a[1], m * a[2]]
    }
}

/// Monomial of the segre ring with the given semigroup exponent.
pub fn segre_monomial(r: &RingRef, s: semigroup::Exp) -> Polynomial {
    let e = semigroup::representative(s);
    Polynomial::monomial(r, fpnorm_core::Monomial::from_exponents(e), 1)
}
