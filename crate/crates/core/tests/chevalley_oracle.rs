//! The short-root Chevalley rule against products computed by localization.

use coadqh_core::localization::SchubertCalculus;
use coadqh_core::{CohClass, CoadjointVariety, DynkinType};

fn check(t: DynkinType) {
    let x = CoadjointVariety::new(t).unwrap();
    let sc = SchubertCalculus::new(t, x.parabolic.clone()).unwrap();
    let h = sc.basis(sc.index_of_word(&[x.node]).unwrap());
    for &a in x.basis() {
        let w = x.weyl_of_root(a).unwrap();
        let prod = sc.mul(&h, &sc.basis(sc.index_of(w).unwrap())).unwrap();
        let mut via_loc = CohClass::zero();
        for (i, c) in prod {
            via_loc.add_term(0, x.root_of_weyl(&sc.elements()[i]).unwrap(), c);
        }
        assert_eq!(x.chevalley_classical(&CohClass::basis(a)), via_loc, "{t} at {}", x.rs.label(a));
    }
}

#[test]
fn chevalley_b_c_g() {
    for t in [DynkinType::b(3), DynkinType::b(4), DynkinType::c(3), DynkinType::c(4), DynkinType::g2()] {
        check(t);
    }
}

#[test]
fn chevalley_d() {
    for n in 4..=6 {
        check(DynkinType::d(n));
    }
}

#[test]
fn chevalley_f4_e6_e7() {
    for t in [DynkinType::f4(), DynkinType::e(6), DynkinType::e(7)] {
        check(t);
    }
}

#[test]
fn chevalley_e8() {
    check(DynkinType::e(8));
}
