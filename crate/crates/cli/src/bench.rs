//! The `bench` subcommand: one closure per prime over a fixed family.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use fpnorm_core::{
    integral_closure, ClosureOptions, Error, Modulus, Polynomial, Presentation, Ring,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^2 v - y^2 u` in `x y u v`.
    Segre,
    /// `u^2 x^4 + u v y^4 + v^2 z^4` in `u v x y z`.
    Quartic,
    /// `u^2 x^p + 2 u v y^p + v^2 z^p` in `u v x y z`.
    QuadraticP,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Segre => "segre",
            Family::Quartic => "quartic",
            Family::QuadraticP => "quadratic-p",
        }
    }

    /// The family member in characteristic `p`.
    pub fn presentation(self, p: u64) -> Result<Presentation, Error> {
        let modulus = Modulus::new(p)?;
        let names = match self {
            Family::Segre => "x y u v",
            Family::Quartic | Family::QuadraticP => "u v x y z",
        };
        let ring = Ring::new(modulus, names.split(' ').map(String::from).collect());
        let v = |i| Polynomial::var(&ring, i);
        let rel = match self {
            Family::Segre => &(&v(0).pow(2) * &v(3)) - &(&v(1).pow(2) * &v(2)),
            Family::Quartic => {
                let (u, w) = (v(0), v(1));
                &(&(&(&u * &u) * &v(2).pow(4)) + &(&(&u * &w) * &v(3).pow(4)))
                    + &(&(&w * &w) * &v(4).pow(4))
            }
            Family::QuadraticP => {
                let (u, w) = (v(0), v(1));
                let mid = (&(&u * &w) * &v(3).pow(p)).scale(modulus.reduce(2));
                &(&(&(&u * &u) * &v(2).pow(p)) + &mid) + &(&(&w * &w) * &v(4).pow(p))
            }
        };
        Presentation::new(&ring, vec![rel])
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "segre" => Ok(Family::Segre),
            "quartic" => Ok(Family::Quartic),
            "quadratic-p" => Ok(Family::QuadraticP),
            other => Err(format!(
                "unknown family '{other}' (expected segre, quartic or quadratic-p)"
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub p: u64,
    /// Largest iteration count over the components.
    pub iterations: Option<usize>,
    /// Numerators summed over the components.
    pub generator_count: Option<usize>,
    /// Fastest of the repeated runs.
    pub wall_seconds: f64,
    pub error: Option<String>,
}

fn run_once(family: Family, p: u64) -> Result<(usize, usize), Error> {
    let pres = family.presentation(p)?;
    let res = integral_closure(&pres, &ClosureOptions::default())?;
    let iterations = res
        .components
        .iter()
        .map(|c| c.iterations)
        .max()
        .unwrap_or(0);
    let gens = res.components.iter().map(|c| c.numerators.len()).sum();
    Ok((iterations, gens))
}

/// Runs each prime `repeat` times (at least once) and keeps the fastest
/// time. A failing prime is recorded in its row and does not stop the
/// others.
pub fn run_bench(family: Family, primes: &[u64], repeat: usize) -> Vec<BenchRow> {
    primes
        .iter()
        .map(|&p| {
            let mut best = f64::INFINITY;
            let mut outcome = None;
            for _ in 0..repeat.max(1) {
                let start = Instant::now();
                let r = run_once(family, p);
                best = best.min(start.elapsed().as_secs_f64());
                let failed = r.is_err();
                outcome = Some(r);
                if failed {
                    break;
                }
            }
            let (iterations, generator_count, error) = match outcome.expect("ran at least once") {
                Ok((i, g)) => (Some(i), Some(g), None),
                Err(e) => (None, None, Some(e.to_string())),
            };
            BenchRow {
                family,
                p,
                iterations,
                generator_count,
                wall_seconds: best,
                error,
            }
        })
        .collect()
}

pub const CSV_HEADER: &str = "family,p,iterations,generator_count,wall_seconds,error";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6},{}\n",
            r.family,
            r.p,
            opt(r.iterations),
            opt(r.generator_count),
            r.wall_seconds,
            csv_field(r.error.as_deref().unwrap_or(""))
        ));
    }
    out
}

/// Parses `2,3,5,7`.
pub fn parse_primes(list: &str) -> Result<Vec<u64>, String> {
    list.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<u64>()
                .map_err(|_| format!("'{s}' is not a number"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        let rows = run_bench(Family::Segre, &[2], 1);
        assert_eq!(rows[0].generator_count, Some(2));
        let rows = run_bench(Family::Quartic, &[2], 1);
        assert_eq!(rows[0].generator_count, Some(5));
        let rows = run_bench(Family::QuadraticP, &[3], 1);
        assert_eq!(rows[0].generator_count, Some(4));
    }

    #[test]
    fn family_relations() {
        let q = Family::QuadraticP.presentation(3).unwrap();
        assert_eq!(q.relations()[0].to_string(), "u^2*x^3 - u*v*y^3 + v^2*z^3");
        let s = Family::Segre.presentation(5).unwrap();
        assert_eq!(s.relations()[0].to_string(), "-y^2*u + x^2*v");
    }

    #[test]
    fn failures_stay_in_their_row() {
        let rows = run_bench(Family::Segre, &[4, 3], 1);
        assert!(rows[0].error.is_some());
        assert_eq!(rows[1].generator_count, Some(2));
        let csv = to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("segre,4,,,"));
        assert!(lines[2].starts_with("segre,3,1,2,"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn prime_lists() {
        assert_eq!(parse_primes("2, 3,5").unwrap(), vec![2, 3, 5]);
        assert!(parse_primes("2,x").is_err());
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
