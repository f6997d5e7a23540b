//! Quotient rings of weighted presentations with known sizes.

use coadqh_linalg::{q, UPoly};
use coadqh_polyideal::{local_algebra_at_origin, squarefree_charpoly_certificate, Ideal, MonomialOrder, Poly, Ring, Strategy};

fn e6() -> Ideal {
    let r = Ring::new(&[("h", 1), ("s", 3), ("t", 4), ("q", 11)]);
    Ideal::parse(
        &r,
        &[
            "h^8 - 6*h^5*s + 3*h^4*t + 9*h^2*s^2 - 12*h*s*t + 6*t^2",
            "h^9 - 4*h^6*s + 3*h^5*t + 3*h^3*s^2 - 6*h^2*s*t + 2*s^3",
            "-97*h^12 + 442*h^9*s - 247*h^8*t - 507*h^6*s^2 + 624*h^5*s*t - 156*h^2*s^2*t + 48*h*q",
        ],
    )
    .unwrap()
}

fn f4() -> Ideal {
    let r = Ring::new(&[("h", 1), ("s", 4), ("q", 11)]);
    Ideal::parse(&r, &["2*h^8 - 6*h^4*s + 3*s^2", "-11*h^12 + 26*h^8*s + 3*h*q"]).unwrap()
}

/// `x^3 = q` presents the quantum cohomology of the projective plane.
fn plane() -> Ideal {
    let r = Ring::new(&[("x", 1), ("q", 3)]);
    Ideal::parse(&r, &["x^3 - q"]).unwrap()
}

#[test]
fn sizes_at_q_one() {
    assert_eq!(e6().specialize("q", &q(1)).unwrap().groebner().unwrap().dim(), Some(72));
    assert_eq!(f4().specialize("q", &q(1)).unwrap().groebner().unwrap().dim(), Some(24));
    assert_eq!(plane().specialize("q", &q(1)).unwrap().groebner().unwrap().dim(), Some(3));
}

#[test]
fn graded_sizes_at_q_zero() {
    let hs = e6().specialize("q", &q(0)).unwrap().groebner().unwrap().hilbert_series().unwrap();
    assert_eq!(hs.values().sum::<usize>(), 72);
    assert_eq!(hs.keys().max(), Some(&21));
    assert!(hs.values().all(|&v| v > 0));
}

#[test]
fn both_strategies_give_one_basis() {
    for i in [e6(), f4(), plane()] {
        let i1 = i.specialize("q", &q(1)).unwrap();
        let a = i1.groebner_with(Strategy::Direct).unwrap();
        let b = i1.groebner_with(Strategy::Homogenize).unwrap();
        assert_eq!(a.basis(), b.basis());
        assert!(a.is_reduced() && a.s_pair_test());
    }
}

#[test]
fn precedence_does_not_change_the_size() {
    for (i, names) in [(e6(), vec!["t", "s", "h"]), (f4(), vec!["s", "h"])] {
        let i1 = i.specialize("q", &q(1)).unwrap();
        let base = i1.groebner().unwrap().dim();
        let order = MonomialOrder::with_precedence(i1.ring(), &names).unwrap();
        let swapped = i1.reorder(order).groebner().unwrap();
        assert_eq!(swapped.dim(), base);
        assert!(swapped.s_pair_test());
    }
}

#[test]
fn saturating_by_a_unit_changes_nothing() {
    let i1 = f4().specialize("q", &q(1)).unwrap();
    let one = Poly::one(i1.ring());
    let a = i1.saturate(&one).unwrap().groebner().unwrap();
    assert_eq!(a.basis(), i1.groebner().unwrap().basis());
}

#[test]
fn fat_point_and_complement_split_the_quotient() {
    for (i, fat_dim) in [(e6(), 6), (f4(), 2)] {
        let i1 = i.specialize("q", &q(1)).unwrap();
        let total = i1.groebner().unwrap().dim().unwrap();
        let fat = local_algebra_at_origin(&i1).unwrap();
        assert_eq!(fat.invariants.dim, fat_dim);
        let h = Poly::var_named(i1.ring(), "h").unwrap();
        let sat = i1.saturate(&h).unwrap().groebner().unwrap();
        let bayer = i.saturate_by_variable("h").unwrap().specialize("q", &q(1)).unwrap().groebner().unwrap();
        assert_eq!(sat.dim(), bayer.dim());
        assert_eq!(fat_dim + sat.dim().unwrap(), total);
        assert!(squarefree_charpoly_certificate(&sat, 1).unwrap());
    }
}

#[test]
fn plane_is_semisimple() {
    let qr = plane().specialize("q", &q(1)).unwrap().groebner().unwrap();
    assert!(squarefree_charpoly_certificate(&qr, 5).unwrap());
    let x = Poly::var(qr.ring(), 0);
    assert_eq!(qr.charpoly(&x).unwrap(), UPoly::new(vec![q(-1), q(0), q(0), q(1)]));
}
