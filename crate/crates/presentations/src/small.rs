//! Checks of the small quantum cohomology presentations: size and grading
//! of the quotient, classical relations, and the split of the spectrum at
//! `q = 1` into one fat point at the origin and reduced points.

use coadqh_core::{CoadjointVariety, DynkinType, Family};
use coadqh_linalg::q;
use coadqh_polyideal::{charpoly_is_squarefree, local_algebra_at_origin, squarefree_charpoly_certificate, Ideal, LocalInvariants, Poly, Ring};

use crate::catalog::catalog;
use crate::classical::SchubertRing;
use crate::report::VerificationReport;
use crate::type_a::verify_type_a;
use crate::PresError;

/// The ADE type of the fat point: `D_n` for `D_n`, `E_n` for `E_n`, `A_2`
/// for `F_4`, `A_1` for `B_n` and `G_2`.
pub fn fat_point_type(t: DynkinType) -> Option<(char, usize)> {
    match t.family {
        Family::D => Some(('D', t.rank)),
        Family::E => Some(('E', t.rank)),
        Family::F => Some(('A', 2)),
        Family::B | Family::G => Some(('A', 1)),
        Family::C => Some(('A', t.rank - 1)),
        Family::A => None,
    }
}

/// The Jacobian ideal of the simple singularity of the given type in `x, y`.
pub fn jacobian_ideal(kind: char, k: usize) -> Result<Ideal, PresError> {
    let ring = Ring::new(&[("x", 1), ("y", 1)]);
    let gens: Vec<String> = match (kind, k) {
        ('A', k) => vec![format!("x^{k}"), "y".into()],
        ('D', k) => vec!["x*y".into(), format!("x^2 + {}*y^{}", k - 1, k - 2)],
        ('E', 6) => vec!["x^2".into(), "y^3".into()],
        ('E', 7) => vec!["3*x^2 + y^3".into(), "3*x*y^2".into()],
        ('E', 8) => vec!["x^2".into(), "y^4".into()],
        _ => return Err(PresError::Unsupported(format!("{kind}{k}"))),
    };
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ok(Ideal::parse(&ring, &refs)?)
}

pub fn reference_invariants(kind: char, k: usize) -> Result<LocalInvariants, PresError> {
    Ok(local_algebra_at_origin(&jacobian_ideal(kind, k)?)?.invariants)
}

pub fn verify_small(t: DynkinType, seed: u64) -> VerificationReport {
    if t.family == Family::A {
        return verify_type_a(t.rank, seed);
    }
    let mut rep = VerificationReport::new(t.to_string(), "small");
    rep.seed = Some(seed);
    if let Err(e) = small_into(t, seed, &mut rep) {
        rep.error("small", e);
    }
    rep.finish()
}

fn fmt_hilbert(v: &[usize]) -> String {
    format!("{v:?}")
}

fn small_into(t: DynkinType, seed: u64, rep: &mut VerificationReport) -> Result<(), PresError> {
    let spec = catalog(t)?;
    let x = CoadjointVariety::new(t)?;
    let total = x.basis().len();
    if !spec.has_presentation() {
        let m = x.chevalley_matrix(&q(1))?;
        rep.check("basis size", total, x.dim as usize + 1);
        rep.check_result("Chevalley charpoly at q=1 squarefree", charpoly_is_squarefree(&m), true);
        return Ok(());
    }
    let i1 = spec.ideal_at(&q(1))?;
    let qr = i1.groebner()?;
    rep.check("dim at q=1", qr.dim().map_or("infinite".into(), |d| d.to_string()), total);

    let graded = spec.ideal_at(&q(0))?.groebner()?;
    let hs = graded.hilbert_series()?;
    let top = hs.keys().max().copied().unwrap_or(0).max(0) as usize;
    let series: Vec<usize> = (0..=top).map(|d| hs.get(&(d as i64)).copied().unwrap_or(0)).collect();
    rep.check("Hilbert series at q=0", fmt_hilbert(&series), fmt_hilbert(&x.poincare_polynomial()));

    let ring = SchubertRing::new(t)?;
    let dict = ring.resolve(&spec.dictionary)?;
    for (k, r) in spec.relations.iter().enumerate() {
        let classical = spec.quantum_variables().iter().try_fold(r.clone(), |p, v| -> Result<Poly, PresError> {
            let i = p.ring().index(v).expect("quantum variable");
            Ok(p.specialize(i, &q(0)))
        })?;
        let value = ring.eval(&classical, &dict).map(|c| x.format_class(&c));
        rep.check_result(format!("relation {k} vanishes classically"), value, "0");
    }

    let (kind, k) = fat_point_type(t).expect("coadjoint type");
    let expected = reference_invariants(kind, k)?;
    let fat = local_algebra_at_origin(&i1)?;
    let inv = &fat.invariants;
    rep.check(format!("fat point dim ({kind}{k})"), inv.dim, expected.dim);
    rep.check(format!("fat point Hilbert function ({kind}{k})"), fmt_hilbert(&inv.hilbert), fmt_hilbert(&expected.hilbert));
    rep.check(format!("fat point socle dim ({kind}{k})"), inv.socle_dim, expected.socle_dim);

    let h = Poly::var_named(i1.ring(), "h")?;
    let sat = i1.saturate(&h)?.groebner()?;
    let sat_dim = sat.dim().unwrap_or(usize::MAX);
    let bayer = spec.ideal().saturate_by_variable("h")?;
    let bayer_dim = bayer.specialize("q", &q(1))?.groebner()?.dim().unwrap_or(usize::MAX);
    rep.check("complement dim by both saturations", bayer_dim, sat_dim);
    rep.check("fat + complement = total", inv.dim + sat_dim, total);
    rep.check_result(format!("complement reduced (seed {seed})"), squarefree_charpoly_certificate(&sat, seed), true);
    if t.family == Family::D {
        let n = t.rank;
        rep.check("type D fat point length", inv.dim, n);
        rep.check("type D reduced points", sat_dim, n * (2 * n - 3));
    }
    Ok(())
}
