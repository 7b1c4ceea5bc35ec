//! The `normalize` subcommand.

use std::fmt::Write as _;
use std::time::Instant;

use fpnorm_core::groebner::{gb_calls, set_pair_limit};
use fpnorm_core::{
    integral_closure, parse_polynomial, verify_result, ClosureOptions, ClosureResult,
    ComponentResult, Error, Polynomial, Presentation, VerificationReport,
};
use serde::Serialize;

use crate::exit::ExitStatus;
use crate::problem::ProblemFile;

#[derive(Clone, Debug, Default)]
pub struct Flags {
    /// Overrides the file's `conductor` line.
    pub conductor: Option<String>,
    pub json: bool,
    pub trace: bool,
    pub verify: bool,
    /// Overrides the file's `max-iter` line.
    pub max_iter: Option<usize>,
    pub pair_limit: Option<usize>,
}

/// Everything a run produces; `main` just forwards it.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: String,
    /// One-line diagnostic on failure, empty otherwise.
    pub stderr: String,
}

impl Outcome {
    fn fail(status: ExitStatus, msg: impl std::fmt::Display) -> Self {
        Outcome {
            status,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Serialize)]
struct JsonReport {
    components: Vec<JsonComponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<Vec<JsonCheck>>,
    stats: JsonStats,
}

#[derive(Serialize)]
struct JsonComponent {
    denominator: String,
    numerators: Vec<String>,
    fractions: Vec<String>,
    iterations: usize,
    is_normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    relations: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct JsonCheck {
    check: &'static str,
    component: usize,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct JsonStats {
    wall_seconds: f64,
    gb_calls: u64,
}

fn wrap(f: &Polynomial, product_too: bool) -> String {
    if f.len() > 1 || (product_too && f.to_string().contains('*')) {
        format!("({f})")
    } else {
        f.to_string()
    }
}

/// `n / D`, or `1` when `n ≡ D` modulo the relations.
pub fn fraction(pres: &Presentation, n: &Polynomial, d: &Polynomial) -> Result<String, Error> {
    if pres.is_zero(&n.try_sub(d)?)? {
        return Ok("1".to_owned());
    }
    Ok(format!("{} / {}", wrap(n, false), wrap(d, true)))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn component_json(c: &ComponentResult, trace: bool, split: bool) -> Result<JsonComponent, Error> {
    let d = c.d();
    let fractions = c
        .numerators
        .iter()
        .map(|n| fraction(&c.presentation, n, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JsonComponent {
        denominator: d.to_string(),
        numerators: strings(&c.numerators),
        fractions,
        iterations: c.iterations,
        is_normal: c.is_normal,
        relations: split.then(|| strings(c.presentation.relations())),
        chain: trace.then(|| c.chain.iter().map(|g| strings(g)).collect()),
    })
}

fn render_text(comps: &[JsonComponent], report: Option<&VerificationReport>) -> String {
    let mut out = String::new();
    let many = comps.len() > 1;
    for (k, c) in comps.iter().enumerate() {
        if many {
            let _ = writeln!(out, "# component {} of {}", k + 1, comps.len());
        }
        if let Some(rels) = &c.relations {
            let _ = writeln!(out, "# relations: {}", rels.join(", "));
        }
        let _ = writeln!(out, "# D = {}", c.denominator);
        let _ = writeln!(out, "# iterations: {}", c.iterations);
        if let Some(chain) = &c.chain {
            for (e, gb) in chain.iter().enumerate() {
                let _ = writeln!(out, "# U_{e}: {}", gb.join(", "));
            }
        }
        for f in &c.fractions {
            let _ = writeln!(out, "{f}");
        }
    }
    if let Some(r) = report {
        for line in r.to_string().lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    out
}

fn closure(
    pf: &ProblemFile,
    flags: &Flags,
) -> Result<(Presentation, ClosureResult), (ExitStatus, String)> {
    let algebra = |e: Error| (ExitStatus::from(&e), e.to_string());
    let conductor = match &flags.conductor {
        Some(text) => Some(
            parse_polynomial(&pf.ring, text)
                .map_err(|e| (ExitStatus::Parse, format!("--conductor: {e}")))?,
        ),
        None => pf.conductor.clone(),
    };
    let opts = ClosureOptions {
        conductor,
        max_iter: flags
            .max_iter
            .or(pf.max_iter)
            .unwrap_or(ClosureOptions::default().max_iter),
    };
    let pres = Presentation::new(&pf.ring, pf.rels.clone()).map_err(algebra)?;
    let res = integral_closure(&pres, &opts).map_err(algebra)?;
    Ok((pres, res))
}

pub fn run_normalize(pf: &ProblemFile, flags: &Flags) -> Outcome {
    set_pair_limit(flags.pair_limit);
    let calls0 = gb_calls();
    let start = Instant::now();
    let computed = closure(pf, flags);
    let res = match computed {
        Ok((_, res)) => res,
        Err((status, msg)) => {
            set_pair_limit(None);
            return Outcome::fail(status, msg);
        }
    };
    let report = if flags.verify {
        match verify_result(&res) {
            Ok(r) => Some(r),
            Err(e) => {
                set_pair_limit(None);
                return Outcome::fail(ExitStatus::from(&e), e);
            }
        }
    } else {
        None
    };
    set_pair_limit(None);
    let wall_seconds = start.elapsed().as_secs_f64();
    let calls = gb_calls() - calls0;

    let split = res.components.len() > 1;
    let comps = match res
        .components
        .iter()
        .map(|c| component_json(c, flags.trace, split))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(c) => c,
        Err(e) => return Outcome::fail(ExitStatus::from(&e), e),
    };

    let stdout = if flags.json {
        let doc = JsonReport {
            components: comps,
            verification: report.as_ref().map(|r| {
                r.checks
                    .iter()
                    .map(|c| JsonCheck {
                        check: c.name,
                        component: c.component,
                        passed: c.passed,
                        detail: c.detail.clone(),
                    })
                    .collect()
            }),
            stats: JsonStats {
                wall_seconds,
                gb_calls: calls,
            },
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_text(&comps, report.as_ref())
    };

    match &report {
        Some(r) if !r.all_passed() => {
            let first = r.failures().next().expect("a failure");
            Outcome {
                status: ExitStatus::VerifyFailed,
                stdout,
                stderr: format!(
                    "error: verification failed: {} (component {})\n",
                    first.name, first.component
                ),
            }
        }
        _ => Outcome {
            status: ExitStatus::Success,
            stdout,
            stderr: String::new(),
        },
    }
}
