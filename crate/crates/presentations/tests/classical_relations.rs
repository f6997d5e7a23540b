//! Lowest-degree classical relations recomputed from localization.

use std::sync::Arc;

use coadqh_core::DynkinType;
use coadqh_linalg::{fmt_q, q, Matrix, Q};
use coadqh_polyideal::{Poly, Ring};
use coadqh_presentations::{catalog, SchubertRing};

fn exponents(ring: &Arc<Ring>, degree: i64) -> Vec<Vec<u32>> {
    let vars: Vec<usize> = (0..ring.nvars()).filter(|&i| !ring.name(i).starts_with('q')).collect();
    let mut out = vec![(vec![0u32; ring.nvars()], degree)];
    for &v in &vars {
        let w = ring.weight(v);
        out = out
            .into_iter()
            .flat_map(|(m, left)| {
                (0..=left / w).map(move |e| {
                    let mut m = m.clone();
                    m[v] = e as u32;
                    (m, left - e * w)
                })
            })
            .collect();
    }
    out.into_iter().filter(|(_, left)| *left == 0).map(|(m, _)| m).collect()
}

/// Kernel of the evaluation map on monomials of one degree.
fn kernel(t: DynkinType, degree: i64) -> (Vec<Vec<u32>>, Vec<Vec<Q>>) {
    let spec = catalog(t).unwrap();
    let r = SchubertRing::new(t).unwrap();
    let dict = r.resolve(&spec.dictionary).unwrap();
    let mons = exponents(&spec.ring, degree);
    let basis = r.x.basis_of_degree(degree);
    let cols: Vec<Vec<Q>> = mons
        .iter()
        .map(|m| {
            let c = r.eval(&Poly::monomial(&spec.ring, m.clone(), q(1)), &dict).unwrap();
            basis.iter().map(|&b| c.coeff(b)).collect()
        })
        .collect();
    (mons, Matrix::from_columns(basis.len(), &cols).nullspace())
}

#[test]
fn e8_lowest_relation_is_the_classical_kernel() {
    let t = DynkinType::e(8);
    let rel = &catalog(t).unwrap().relations[0];
    let (mons, ker) = kernel(t, 20);
    assert_eq!(ker.len(), 1);
    let last = mons.iter().position(|m| m[..] == [0, 0, 2, 0]).unwrap();
    let scale = rel.coeff(&mons[last]) / ker[0][last].clone();
    for (m, c) in mons.iter().zip(&ker[0]) {
        assert_eq!(fmt_q(&rel.coeff(m)), fmt_q(&(c * &scale)), "{m:?}");
    }
}

#[test]
fn e8_kernel_weights_h14_s_like_t_squared() {
    let (mons, ker) = kernel(DynkinType::e(8), 20);
    let at = |m: [u32; 4]| ker[0][mons.iter().position(|x| x[..] == m[..]).unwrap()].clone();
    assert_eq!(fmt_q(&(at([14, 1, 0, 0]) / at([0, 0, 2, 0]))), "1");
    assert_eq!(fmt_q(&(at([10, 0, 1, 0]) / at([0, 0, 2, 0]))), "2");
}
