//! Exact commutative algebra over Q.
//!
//! Sparse polynomials in weighted variables, weighted degrevlex orders with
//! declared precedence and elimination blocks, reduced Groebner bases,
//! zero-dimensional quotient rings with multiplication matrices, saturation,
//! local algebras at the origin, and Jacobian ranks.

mod groebner;
pub mod ideal;
pub mod local;
pub mod order;
mod parse;
pub mod poly;

pub use ideal::{Ideal, QuotientRing, Strategy};
pub use local::{
    charpoly_is_squarefree, is_squarefree, jacobian_rank_at, local_algebra_at_h0, local_algebra_at_origin, local_algebra_at_zero_of,
    random_linear_form,
    squarefree_charpoly_certificate, LocalAlgebra, LocalInvariants,
};
pub use order::MonomialOrder;
pub use poly::{Mono, Poly, Ring};

use coadqh_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad monomial order: {0}")]
    BadOrder(String),
    #[error("the quotient ring is infinite-dimensional")]
    InfiniteQuotient,
    #[error("the algebra is not local at the origin")]
    NotLocal,
    #[error("no coordinate given for {0}")]
    MissingCoordinate(String),
    #[error("saturation: {0}")]
    Saturation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
