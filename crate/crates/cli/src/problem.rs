//! The line-oriented problem file.
//!
//! ```text
//! # Segre-type surface
//! p: 2
//! vars: x y u v
//! rels: x^2*v - y^2*u
//! conductor: x^2
//! max-iter: 64
//! ```
//!
//! `rels` holds a comma-separated list and may be repeated. `conductor`
//! and `max-iter` are optional. Blank lines and `#` comments are ignored.

use std::fmt;

use fpnorm_core::{parse_polynomial, Error as CoreError, Modulus, Polynomial, Ring, RingRef};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {p} is not a prime below 2^20")]
    NotPrime { line: usize, p: String },
    #[error("missing required key '{0}'")]
    Missing(&'static str),
}

impl ProblemError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ProblemError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProblemFile {
    pub ring: RingRef,
    pub rels: Vec<Polynomial>,
    pub conductor: Option<Polynomial>,
    pub max_iter: Option<usize>,
}

impl ProblemFile {
    pub fn p(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        self.ring.vars()
    }
}

struct Entry<'a> {
    line: usize,
    /// 1-based column where the value starts
    column: usize,
    value: &'a str,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn poly_at(
    ring: &RingRef,
    e: &Entry<'_>,
    text: &str,
    offset: usize,
) -> Result<Polynomial, ProblemError> {
    parse_polynomial(ring, text).map_err(|err| match err {
        CoreError::Parse { column, message } => {
            ProblemError::at(e.line, e.column + offset + column - 1, message)
        }
        other => ProblemError::at(e.line, e.column + offset, other.to_string()),
    })
}

pub fn parse_input(text: &str) -> Result<ProblemFile, ProblemError> {
    let mut p: Option<Entry> = None;
    let mut vars: Option<Entry> = None;
    let mut rels: Vec<Entry> = Vec::new();
    let mut conductor: Option<Entry> = None;
    let mut max_iter: Option<Entry> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(ProblemError::at(line, col, "expected 'key: value'"));
        };
        let column = key.chars().count() + 2;
        let entry = Entry {
            line,
            column,
            value,
        };
        let slot = match key.trim() {
            "p" => &mut p,
            "vars" => &mut vars,
            "conductor" => &mut conductor,
            "max-iter" => &mut max_iter,
            "rels" => {
                rels.push(entry);
                continue;
            }
            other => {
                let col = content.len() - content.trim_start().len() + 1;
                return Err(ProblemError::at(
                    line,
                    col,
                    format!("unknown key '{other}'"),
                ));
            }
        };
        if slot.is_some() {
            return Err(ProblemError::at(
                line,
                1,
                format!("duplicate key '{}'", key.trim()),
            ));
        }
        *slot = Some(entry);
    }

    let p_entry = p.ok_or(ProblemError::Missing("p"))?;
    let p_text = p_entry.value.trim();
    let modulus = p_text
        .parse::<u64>()
        .ok()
        .and_then(|v| Modulus::new(v).ok())
        .ok_or_else(|| ProblemError::NotPrime {
            line: p_entry.line,
            p: p_text.to_owned(),
        })?;

    let vars_entry = vars.ok_or(ProblemError::Missing("vars"))?;
    let mut names: Vec<String> = Vec::new();
    let mut offset = 0;
    for tok in vars_entry.value.split_whitespace() {
        let start = vars_entry.value[offset..].find(tok).unwrap() + offset;
        offset = start + tok.len();
        let col = vars_entry.column + start;
        if !valid_name(tok) {
            return Err(ProblemError::at(
                vars_entry.line,
                col,
                format!("invalid variable name '{tok}'"),
            ));
        }
        if names.iter().any(|n| n == tok) {
            return Err(ProblemError::at(
                vars_entry.line,
                col,
                format!("duplicate variable '{tok}'"),
            ));
        }
        names.push(tok.to_owned());
    }
    if names.is_empty() {
        return Err(ProblemError::at(
            vars_entry.line,
            vars_entry.column,
            "no variables declared",
        ));
    }
    let ring = Ring::new(modulus, names);

    if rels.is_empty() {
        return Err(ProblemError::Missing("rels"));
    }
    let mut polys = Vec::new();
    for e in &rels {
        let mut offset = 0;
        for piece in e.value.split(',') {
            polys.push(poly_at(&ring, e, piece, offset)?);
            offset += piece.len() + 1;
        }
    }

    let conductor = conductor
        .map(|e| poly_at(&ring, &e, e.value, 0))
        .transpose()?;
    let max_iter = max_iter
        .map(|e| {
            e.value
                .trim()
                .parse::<usize>()
                .map_err(|_| ProblemError::at(e.line, e.column, "expected a nonnegative integer"))
        })
        .transpose()?;

    Ok(ProblemFile {
        ring,
        rels: polys,
        conductor,
        max_iter,
    })
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p: {}", self.p())?;
        writeln!(f, "vars: {}", self.vars().join(" "))?;
        let rels: Vec<String> = self.rels.iter().map(|r| r.to_string()).collect();
        writeln!(f, "rels: {}", rels.join(", "))?;
        if let Some(c) = &self.conductor {
            writeln!(f, "conductor: {c}")?;
        }
        if let Some(m) = self.max_iter {
            writeln!(f, "max-iter: {m}")?;
        }
        Ok(())
    }
}
