//! Queries and the acceptance suite behind the `coadqh` binary.

pub mod query;
pub mod suite;

use coadqh_core::{CohClass, CoadjointVariety, DynkinType};
use coadqh_linalg::fmt_q;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Compute(_) => "compute",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

impl From<coadqh_core::CoreError> for CliError {
    fn from(e: coadqh_core::CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<coadqh_presentations::PresError> for CliError {
    fn from(e: coadqh_presentations::PresError) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// `E6`, `D5`, or a bare family letter completed by `--n`.
pub fn parse_tag(tag: &str, n: Option<usize>) -> Result<DynkinType, CliError> {
    let t = tag.trim();
    let full = match (t.len(), n) {
        (1, Some(n)) => format!("{t}{n}"),
        (1, None) => return Err(CliError::Usage(format!("{t} needs --n"))),
        (_, Some(n)) if t[1..] != n.to_string() => return Err(CliError::Usage(format!("{t} conflicts with --n {n}"))),
        _ => t.to_string(),
    };
    full.parse().map_err(|e: coadqh_core::CoreError| CliError::Usage(e.to_string()))
}

/// A class as a list of `{q, class, coeff}` terms plus its printed form.
pub fn class_json(x: &CoadjointVariety, c: &CohClass) -> Value {
    let terms: Vec<Value> = c.iter().map(|(k, r, v)| json!({ "q": k, "class": x.rs.label(r), "coeff": fmt_q(v) })).collect();
    json!({ "terms": terms, "text": x.format_class(c) })
}
