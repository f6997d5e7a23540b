//! Root systems, Weyl groups and the Schubert combinatorics of coadjoint
//! varieties: Chevalley operators, lines through a point, minuscule
//! Littlewood-Richardson calculus and diagram foldings.

pub mod coadjoint;
pub mod dynkin;
pub mod folding;
pub mod lines;
pub mod localization;
pub mod minuscule;
pub mod roots;
pub mod weyl;

pub use coadjoint::{CohClass, CoadjointVariety};
pub use dynkin::{DynkinType, Family};
pub use roots::RootSystem;
pub use weyl::{ParabolicSubset, WeylElement};

pub use coadqh_linalg::{q, Q};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("invalid rank {1} for family {0:?}")]
    InvalidRank(Family, usize),
    #[error("node {0} out of range")]
    BadNode(usize),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("parabolic data: {0}")]
    Parabolic(String),
    #[error("element is not a minimal coset representative")]
    NotMinimal,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("linear algebra: {0}")]
    Linalg(String),
    #[error("degree balance violated: expected {expected}, got {got}")]
    Unbalanced { expected: i64, got: i64 },
    #[error("lift failure: {0}")]
    Lift(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl From<coadqh_linalg::LinalgError> for CoreError {
    fn from(e: coadqh_linalg::LinalgError) -> Self {
        CoreError::Linalg(e.to_string())
    }
}
