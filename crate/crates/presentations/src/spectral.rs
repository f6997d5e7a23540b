//! Multiplication by `h` in the presentation quotient against the quantum
//! Chevalley operator.

use coadqh_core::{CoadjointVariety, DynkinType, Family};
use coadqh_linalg::{fmt_q, UPoly, Q};
use coadqh_polyideal::{charpoly_is_squarefree, Poly};

use crate::catalog::catalog;
use crate::report::VerificationReport;
use crate::PresError;

pub fn verify_spectral_match(t: DynkinType, v: &Q) -> VerificationReport {
    let mut rep = VerificationReport::new(t.to_string(), "spectral");
    if let Err(e) = spectral_into(t, v, &mut rep) {
        rep.error("spectral", e);
    }
    rep.finish()
}

/// `identical`, or the first coefficient where the two differ.
fn compare(a: &UPoly, b: &UPoly) -> String {
    if a == b {
        return "identical".into();
    }
    let top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    for k in (0..=top).rev() {
        if a.coeff(k) != b.coeff(k) {
            return format!("x^{k}: {} vs {}", fmt_q(&a.coeff(k)), fmt_q(&b.coeff(k)));
        }
    }
    "identical".into()
}

fn spectral_into(t: DynkinType, v: &Q, rep: &mut VerificationReport) -> Result<(), PresError> {
    if t.family == Family::A {
        return Err(PresError::Unsupported(format!("{t} has no Chevalley operator here")));
    }
    let x = CoadjointVariety::new(t)?;
    let spec = catalog(t)?;
    let n = x.basis().len();
    let chev = x.chevalley_matrix(v)?;
    if !spec.has_presentation() {
        rep.check_result(format!("Chevalley charpoly at q={} squarefree", fmt_q(v)), charpoly_is_squarefree(&chev), true);
        return Ok(());
    }
    let qr = spec.ideal_at(v)?.groebner()?;
    let h = Poly::var_named(qr.ring(), "h")?;
    let a = qr.charpoly(&h)?;
    let b = chev.charpoly()?;
    rep.check("presentation charpoly degree", a.degree().unwrap_or(0), n);
    rep.check("Chevalley charpoly degree", b.degree().unwrap_or(0), n);
    rep.check(format!("charpolys at q={}", fmt_q(v)), compare(&a, &b), "identical");
    Ok(())
}
