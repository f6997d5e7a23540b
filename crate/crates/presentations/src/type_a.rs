//! The two-parameter presentation for type `A_n` at `q1 = q2 = 1`.

use coadqh_core::DynkinType;
use coadqh_linalg::q;
use coadqh_polyideal::{local_algebra_at_origin, squarefree_charpoly_certificate, Poly};

use crate::catalog::catalog;
use crate::report::VerificationReport;
use crate::PresError;

/// Semisimple exactly for even `n`; for odd `n` one fat point `C[e]/(e^n)`
/// at the origin plus reduced points.
pub fn verify_type_a(n: usize, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("A{n}"), "small");
    rep.seed = Some(seed);
    if let Err(e) = type_a_into(n, seed, &mut rep) {
        rep.error("type A", e);
    }
    rep.finish()
}

fn type_a_into(n: usize, seed: u64, rep: &mut VerificationReport) -> Result<(), PresError> {
    if n < 2 {
        return Err(PresError::Unsupported(format!("A{n}")));
    }
    let spec = catalog(DynkinType::a(n))?;
    let i1 = spec.ideal_at(&q(1))?;
    let qr = i1.groebner()?;
    let total = qr.dim().unwrap_or(usize::MAX);
    rep.check("dim at q1=q2=1", total, n * (n + 1));
    let semisimple = squarefree_charpoly_certificate(&qr, seed)?;
    rep.check(format!("semisimple (seed {seed})"), semisimple, n.is_multiple_of(2));
    let fat = local_algebra_at_origin(&i1)?;
    let inv = &fat.invariants;
    let (dim, hilbert) = if n.is_multiple_of(2) { (0, Vec::new()) } else { (n, vec![1; n]) };
    rep.check("fat point dim", inv.dim, dim);
    rep.check("fat point Hilbert function", format!("{:?}", inv.hilbert), format!("{hilbert:?}"));
    if n % 2 == 1 {
        rep.check("fat point socle dim", inv.socle_dim, 1);
        let f = Poly::parse(i1.ring(), "h1 + h2")?;
        let sat = i1.saturate(&f)?.groebner()?;
        let sat_dim = sat.dim().unwrap_or(usize::MAX);
        rep.check("fat + complement = total", inv.dim + sat_dim, total);
        rep.check_result(format!("complement reduced (seed {seed})"), squarefree_charpoly_certificate(&sat, seed), true);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        for n in 2..=5 {
            let r = verify_type_a(n, 3);
            assert!(r.passed(), "A{n}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn a1_is_rejected() {
        assert!(!verify_type_a(1, 0).passed());
    }
}
