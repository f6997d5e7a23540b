//! Exact linear algebra over the rationals.
//!
//! Dense matrices of [`BigRational`], row reduction, and characteristic
//! polynomials computed by a multi-modular Hessenberg reduction with CRT
//! reconstruction. Univariate polynomial helpers (gcd, derivative,
//! squarefree tests) live in [`upoly`].

pub mod matrix;
pub mod modular;
pub mod upoly;

pub use matrix::Matrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use upoly::UPoly;

use thiserror::Error;

/// Rational scalar used throughout the workspace.
pub type Q = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("linear system has a {0}-dimensional solution space")]
    NotUnique(usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
}

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed) into a rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().ok()?;
            let d: BigInt = b.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-3", "7/2", "-11/13"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(fmt_q(&parse_q("4/2").unwrap()), "2");
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }
}
