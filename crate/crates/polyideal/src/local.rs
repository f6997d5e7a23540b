//! Local algebras at the origin, Jacobian ranks, and semisimplicity
//! certificates for zero-dimensional quotients.

use coadqh_linalg::modular::{self, PrimeStream};
use coadqh_linalg::{q, Matrix, UPoly, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{Ideal, QuotientRing};
use crate::poly::Poly;
use crate::PolyError;

/// Invariants of a finite local algebra supported at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariants {
    pub dim: usize,
    /// `dim m^k / m^(k+1)` for `k = 0, 1, ...` until it vanishes.
    pub hilbert: Vec<usize>,
    pub socle_dim: usize,
    /// Largest `k` with `m^k != 0`.
    pub socle_degree: usize,
}

impl LocalInvariants {
    /// Computes the invariants, failing unless every variable acts
    /// nilpotently.
    pub fn of(qr: &QuotientRing) -> Result<LocalInvariants, PolyError> {
        let n = qr.dim().ok_or(PolyError::InfiniteQuotient)?;
        let ring = qr.ring().clone();
        let mats: Vec<Matrix> = (0..ring.nvars()).map(|i| qr.mult_matrix(&Poly::var(&ring, i))).collect::<Result<_, _>>()?;
        if !mats.iter().all(Matrix::is_nilpotent) {
            return Err(PolyError::NotLocal);
        }
        let mut dims = vec![n];
        let mut span: Vec<Vec<Q>> = (0..n).map(|i| unit(n, i)).collect();
        while !span.is_empty() {
            let mut next = Vec::new();
            for m in &mats {
                for v in &span {
                    next.push(m.mul_vec(v)?);
                }
            }
            span = if next.is_empty() { next } else { Matrix::from_columns(n, &next).column_space() };
            dims.push(span.len());
        }
        let hilbert: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
        let socle_dim = if n == 0 {
            0
        } else {
            let rows: Vec<Vec<Q>> = mats.iter().flat_map(|m| (0..n).map(move |i| m.row(i).to_vec())).collect();
            if rows.is_empty() {
                n
            } else {
                Matrix::from_rows(rows)?.nullspace().len()
            }
        };
        let socle_degree = hilbert.len().saturating_sub(1);
        Ok(LocalInvariants { dim: n, hilbert, socle_dim, socle_degree })
    }
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![q(0); n];
    v[i] = q(1);
    v
}

/// The quotient by `I + (f)` with its local invariants.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    pub quotient: QuotientRing,
    pub invariants: LocalInvariants,
}

/// The algebra `K[x]/(I + (f))`, which is the local algebra of the zero
/// locus of `f` when that locus is the origin and `f` acts nilpotently
/// there; callers confirm the latter through dimension additivity.
pub fn local_algebra_at_zero_of(ideal: &Ideal, f: &Poly) -> Result<LocalAlgebra, PolyError> {
    let quotient = ideal.plus(std::slice::from_ref(f)).groebner()?;
    let invariants = LocalInvariants::of(&quotient)?;
    Ok(LocalAlgebra { quotient, invariants })
}

/// [`local_algebra_at_zero_of`] for the variable `h`.
pub fn local_algebra_at_h0(ideal: &Ideal) -> Result<LocalAlgebra, PolyError> {
    let h = Poly::var_named(ideal.ring(), "h")?;
    local_algebra_at_zero_of(ideal, &h)
}

/// The local algebra of a zero-dimensional `ideal` at the origin, computed as
/// `K[x]/(I + m^N)` for the first `N` at which the dimension stops growing.
/// An empty quotient means the origin is not in the zero locus.
pub fn local_algebra_at_origin(ideal: &Ideal) -> Result<LocalAlgebra, PolyError> {
    let ring = ideal.ring().clone();
    let mut prev: Option<QuotientRing> = None;
    for n in 1..=MAX_LOCAL_POWER {
        let quotient = ideal.plus(&monomials_of_degree(&ring, n)).groebner()?;
        let d = quotient.dim().ok_or(PolyError::InfiniteQuotient)?;
        if let Some(p) = prev {
            if p.dim() == Some(d) {
                let invariants = LocalInvariants::of(&p)?;
                return Ok(LocalAlgebra { quotient: p, invariants });
            }
        }
        prev = Some(quotient);
    }
    Err(PolyError::NotLocal)
}

const MAX_LOCAL_POWER: u32 = 64;

fn monomials_of_degree(ring: &std::sync::Arc<crate::Ring>, n: u32) -> Vec<Poly> {
    fn rec(ring: &std::sync::Arc<crate::Ring>, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Poly>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Poly::monomial(ring, cur.clone(), q(1)));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(ring, i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if ring.nvars() > 0 {
        rec(ring, 0, n, &mut vec![0; ring.nvars()], &mut out);
    }
    out
}

/// Rank of the Jacobian matrix of `relations` at `point`, which must give
/// a coordinate for every variable.
pub fn jacobian_rank_at(relations: &[Poly], point: &[(&str, Q)]) -> Result<usize, PolyError> {
    let Some(first) = relations.first() else {
        return Ok(0);
    };
    let ring = first.ring();
    let mut coords = vec![None; ring.nvars()];
    for (name, v) in point {
        let i = ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        coords[i] = Some(v.clone());
    }
    let coords: Vec<Q> = coords
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| PolyError::MissingCoordinate(ring.name(i).to_string())))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Q>> = relations.iter().map(|r| (0..ring.nvars()).map(|i| r.derivative(i).eval(&coords)).collect()).collect();
    Ok(Matrix::from_rows(rows)?.rank())
}

/// A linear form with coefficients drawn from a seeded ChaCha8 stream.
pub fn random_linear_form(ring: &std::sync::Arc<crate::Ring>, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Poly::zero(ring);
    for i in 0..ring.nvars() {
        let c: i64 = rng.gen_range(-1000..=1000);
        f = &f + &Poly::var(ring, i).scale(&q(c));
    }
    f
}

/// Squarefreeness of a rational polynomial, decided modulo a large prime
/// when possible and by an exact gcd otherwise.
pub fn is_squarefree(p: &UPoly) -> bool {
    for prime in PrimeStream::new().take(3) {
        if p.squarefree_mod_p(prime) == Some(true) {
            return true;
        }
    }
    p.is_squarefree()
}

/// Squarefreeness of a characteristic polynomial, decided from the matrix
/// modulo large primes when possible and exactly otherwise.
pub fn charpoly_is_squarefree(m: &Matrix) -> Result<bool, PolyError> {
    for prime in PrimeStream::new().take(3) {
        if modular::charpoly_squarefree_mod_p(m, prime) == Some(true) {
            return Ok(true);
        }
    }
    Ok(m.charpoly()?.is_squarefree())
}

/// Whether multiplication by a seeded random linear form has a squarefree
/// characteristic polynomial, which certifies that the quotient is reduced.
pub fn squarefree_charpoly_certificate(qr: &QuotientRing, seed: u64) -> Result<bool, PolyError> {
    let f = random_linear_form(qr.ring(), seed);
    charpoly_is_squarefree(&qr.mult_matrix(&f)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ring;

    #[test]
    fn local_invariants_of_e6_singularity() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let qr = Ideal::parse(&r, &["x^2", "y^3"]).unwrap().groebner().unwrap();
        let inv = LocalInvariants::of(&qr).unwrap();
        assert_eq!(inv, LocalInvariants { dim: 6, hilbert: vec![1, 2, 2, 1], socle_dim: 1, socle_degree: 3 });
    }

    #[test]
    fn non_gorenstein_socle() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let qr = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap().groebner().unwrap();
        let inv = LocalInvariants::of(&qr).unwrap();
        assert_eq!(inv.socle_dim, 2);
        assert_eq!(inv.hilbert, vec![1, 2]);
    }

    #[test]
    fn local_algebra_at_origin_isolates_the_fat_point() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        // a triple point at the origin on the x-axis, plus two reduced points
        let i = Ideal::parse(&r, &["y - x^3 + x^5", "x^3*(x^2 - 1)"]).unwrap();
        assert_eq!(i.groebner().unwrap().dim(), Some(5));
        let la = local_algebra_at_origin(&i).unwrap();
        assert_eq!(la.invariants, LocalInvariants { dim: 3, hilbert: vec![1, 1, 1], socle_dim: 1, socle_degree: 2 });
        let away = Ideal::parse(&r, &["x - 1", "y"]).unwrap();
        assert_eq!(local_algebra_at_origin(&away).unwrap().invariants.dim, 0);
    }

    #[test]
    fn non_local_is_rejected() {
        let r = Ring::new(&[("x", 1)]);
        let qr = Ideal::parse(&r, &["x^2 - x"]).unwrap().groebner().unwrap();
        assert_eq!(LocalInvariants::of(&qr), Err(PolyError::NotLocal));
    }

    #[test]
    fn jacobian_ranks() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let rels = vec![Poly::parse(&r, "x^2 + y").unwrap(), Poly::parse(&r, "x*y").unwrap()];
        assert_eq!(jacobian_rank_at(&rels, &[("x", q(0)), ("y", q(0))]).unwrap(), 1);
        assert_eq!(jacobian_rank_at(&rels, &[("x", q(1)), ("y", q(0))]).unwrap(), 2);
        assert_eq!(jacobian_rank_at(&[], &[]).unwrap(), 0);
        assert!(jacobian_rank_at(&rels, &[("x", q(0))]).is_err());
    }

    #[test]
    fn certificate_separates_reduced_and_fat() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let reduced = Ideal::parse(&r, &["x^2 - 1", "y^2 - 4"]).unwrap().groebner().unwrap();
        assert!(squarefree_charpoly_certificate(&reduced, 7).unwrap());
        let fat = Ideal::parse(&r, &["x^2", "y - 1"]).unwrap().groebner().unwrap();
        assert!(!squarefree_charpoly_certificate(&fat, 7).unwrap());
    }
}
