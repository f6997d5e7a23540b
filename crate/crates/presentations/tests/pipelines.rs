//! Every verification pipeline on every catalog entry.

use coadqh_core::DynkinType;
use coadqh_linalg::q;
use coadqh_presentations::{verify_big, verify_gw, verify_products, verify_small, verify_spectral_match, SchubertRing, VerificationReport};

fn assert_passed(r: &VerificationReport) {
    let failures: Vec<_> = r.failures().collect();
    assert!(failures.is_empty(), "{} {}: {failures:#?}", r.tag, r.kind);
    assert!(!r.checks.is_empty(), "{} {}: no checks ran", r.tag, r.kind);
}

fn exceptional() -> Vec<DynkinType> {
    vec![DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4()]
}

#[test]
fn small_exceptional() {
    for t in exceptional() {
        assert_passed(&verify_small(t, 11));
    }
}

#[test]
fn small_type_d() {
    for n in 4..=12 {
        assert_passed(&verify_small(DynkinType::d(n), 11));
    }
}

#[test]
fn small_type_a() {
    for n in 2..=6 {
        assert_passed(&verify_small(DynkinType::a(n), 11));
    }
}

#[test]
fn big_exceptional() {
    for t in exceptional() {
        assert_passed(&verify_big(t));
    }
}

#[test]
fn big_type_d() {
    for n in 4..=12 {
        assert_passed(&verify_big(DynkinType::d(n)));
    }
}

#[test]
fn spectral_d4_to_d8_and_exceptional() {
    let mut types: Vec<DynkinType> = (4..=8).map(DynkinType::d).collect();
    types.extend(exceptional());
    for t in types {
        assert_passed(&verify_spectral_match(t, &q(1)));
    }
}

#[test]
fn gw_tables() {
    let mut types = exceptional();
    types.extend((4..=8).map(DynkinType::d));
    for t in types {
        assert_passed(&verify_gw(t));
    }
}

#[test]
fn product_fixtures_against_localization() {
    let mut types = exceptional();
    types.extend((4..=9).map(DynkinType::d));
    for t in types {
        let oracle = SchubertRing::new(t).unwrap();
        assert_passed(&verify_products(t, Some(&oracle)));
    }
}
