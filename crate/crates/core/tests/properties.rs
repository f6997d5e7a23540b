use std::collections::HashSet;

use coadqh_core::folding::FoldingMap;
use coadqh_core::lines::Gw1;
use coadqh_core::minuscule::MinusculePoset;
use coadqh_core::{q, CoadjointVariety, CohClass, CoreError, DynkinType, ParabolicSubset, RootSystem, WeylElement};
use proptest::prelude::*;
use proptest::sample::select;

fn small_types() -> Vec<DynkinType> {
    vec![
        DynkinType::a(4),
        DynkinType::a(6),
        DynkinType::b(4),
        DynkinType::c(3),
        DynkinType::d(5),
        DynkinType::d(6),
        DynkinType::e(6),
        DynkinType::f4(),
        DynkinType::g2(),
    ]
}

fn word_in(t: DynkinType, len: usize, seed: &[usize]) -> Vec<usize> {
    seed.iter().take(len).map(|&x| x % t.rank + 1).collect()
}

fn levi_group_order(rs: &RootSystem, nodes: &[usize]) -> usize {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut stack = vec![rs.identity()];
    seen.insert(rs.identity());
    while let Some(w) = stack.pop() {
        for &i in nodes {
            let v = rs.right_mul(&w, i);
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parabolic_factorisation(t in select(small_types()), seed in prop::collection::vec(0usize..64, 10), len in 0usize..=10, mask in 0u32..256) {
        let rs = RootSystem::new(t);
        let u = rs.from_word(&word_in(t, len, &seed)).unwrap();
        let p = ParabolicSubset::new((1..=t.rank).filter(|i| mask & (1 << (i - 1)) != 0));
        let (up, u_p) = rs.coset_decompose(&u, &p);
        prop_assert_eq!(u.length(), up.length() + u_p.length());
        prop_assert_eq!(rs.compose(&up, &u_p), u.clone());
        prop_assert!(rs.is_min_coset_rep(&up, &p));
        prop_assert!(rs.in_parabolic(&u_p, &p));
    }

    #[test]
    fn action_preserves_roots_and_negation(t in select(small_types()), seed in prop::collection::vec(0usize..64, 12), len in 0usize..=12) {
        let rs = RootSystem::new(t);
        let w = rs.from_word(&word_in(t, len, &seed)).unwrap();
        let mut img = HashSet::new();
        for i in 0..rs.len() {
            let j = rs.act_idx(&w, i);
            prop_assert_eq!(rs.act_idx(&w, rs.negate(i)), rs.negate(j));
            prop_assert_eq!(rs.is_short(i), rs.is_short(j));
            img.insert(j);
        }
        prop_assert_eq!(img.len(), rs.len());
        let inv: usize = (0..rs.len()).filter(|&i| rs.is_positive(i) && !rs.is_positive(rs.act_idx(&w, i))).count();
        prop_assert_eq!(inv, w.length());
    }

    #[test]
    fn pi_star_is_a_homomorphism(t in select(vec![DynkinType::b(3), DynkinType::c(3), DynkinType::f4(), DynkinType::g2()]),
                                 seed in prop::collection::vec(0usize..64, 16), la in 0usize..=8, lb in 0usize..=8) {
        let f = FoldingMap::for_target(t).unwrap();
        let a = f.tgt.from_word(&word_in(t, la, &seed)).unwrap();
        let b = f.tgt.from_word(&word_in(t, lb, &seed[8..])).unwrap();
        prop_assert_eq!(f.pi_star(&f.tgt.compose(&a, &b)), f.src.compose(&f.pi_star(&a), &f.pi_star(&b)));
    }

    #[test]
    fn lr_positivity_symmetry_additivity(idx in 0usize..3, u in 0usize..78, v in 0usize..78) {
        let (t, node) = [(DynkinType::e(6), 1), (DynkinType::d(6), 6), (DynkinType::a(6), 3)][idx];
        let p = MinusculePoset::new(t, node).unwrap();
        let (u, v) = (u % p.n_ideals(), v % p.n_ideals());
        let uv = p.lr(u, v);
        prop_assert_eq!(&uv, &p.lr(v, u));
        for (w, c) in &uv {
            prop_assert_eq!(p.size(*w), p.size(u) + p.size(v));
            prop_assert!(c.is_integer() && *c > q(0));
        }
        prop_assert_eq!(p.lr(p.unit(), v), vec![(v, q(1))]);
    }
}

fn gw_e6() -> &'static Gw1 {
    use std::sync::OnceLock;
    static G: OnceLock<Gw1> = OnceLock::new();
    G.get_or_init(|| Gw1::new(CoadjointVariety::new(DynkinType::e(6)).unwrap()).unwrap())
}

fn gw_f4() -> &'static Gw1 {
    use std::sync::OnceLock;
    static G: OnceLock<Gw1> = OnceLock::new();
    G.get_or_init(|| Gw1::new(CoadjointVariety::new(DynkinType::f4()).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gw_permutation_symmetry(folded in any::<bool>(), a in 0usize..72, b in 0usize..72, c in 0usize..72) {
        let g = if folded { gw_f4() } else { gw_e6() };
        let x = g.x();
        let n = x.basis().len();
        let (a, b) = (x.basis()[a % n], x.basis()[b % n]);
        let target = x.index_r + 1 - x.degree(a) - x.degree(b);
        let cands = x.basis_of_degree(target);
        let cls = |r: usize| CohClass::basis(r);
        if cands.is_empty() {
            let any = x.basis()[c % n];
            let got = g.gw1(&[cls(a), cls(b), cls(any)]);
            let balanced = x.degree(a) + x.degree(b) + x.degree(any) == x.index_r + 1;
            let signalled = matches!(got, Err(CoreError::Unbalanced { .. }));
            prop_assert!(balanced || signalled);
        } else {
            let c = cands[c % cands.len()];
            let perms = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
            let vals: Vec<_> = perms.iter().map(|p| g.gw1(&[cls(p[0]), cls(p[1]), cls(p[2])])).collect();
            if vals.iter().any(|v| v.is_err()) {
                // lifts to E6/P1 exist only up to half the dimension
                prop_assert!(folded && 2 * [a, b, c].iter().map(|&y| x.degree(y)).max().unwrap() > x.dim);
                prop_assert!(vals.iter().all(|v| matches!(v, Err(CoreError::Lift(_)))));
            } else {
                for v in &vals {
                    prop_assert_eq!(v, &vals[0]);
                }
            }
        }
    }

    #[test]
    fn gw_balance_violation_is_signalled(folded in any::<bool>(), a in 0usize..72, b in 0usize..72, c in 0usize..72) {
        let g = if folded { gw_f4() } else { gw_e6() };
        let x = g.x();
        let n = x.basis().len();
        let r = [x.basis()[a % n], x.basis()[b % n], x.basis()[c % n]];
        let total: i64 = r.iter().map(|&y| x.degree(y)).sum();
        let got = g.gw1(&r.map(CohClass::basis));
        if total != x.index_r + 1 {
            prop_assert_eq!(got, Err(CoreError::Unbalanced { expected: x.index_r + 1, got: total }));
        } else {
            let lifts = !folded || r.iter().all(|&y| 2 * x.degree(y) <= x.dim);
            prop_assert_eq!(got.is_ok(), lifts);
        }
    }
}

#[test]
fn coset_counts_match_group_orders() {
    for t in [DynkinType::a(4), DynkinType::b(3), DynkinType::c(4), DynkinType::d(5), DynkinType::f4(), DynkinType::g2()] {
        let rs = RootSystem::new(t);
        let whole = rs.min_coset_reps(&ParabolicSubset::borel(t.rank), None).len();
        assert_eq!(whole, levi_group_order(&rs, &(1..=t.rank).collect::<Vec<_>>()));
        for node in 1..=t.rank {
            let p = ParabolicSubset::new([node]);
            let levi: Vec<usize> = p.levi_nodes(t.rank);
            assert_eq!(rs.min_coset_reps(&p, None).len() * levi_group_order(&rs, &levi), whole, "{t} P{node}");
        }
    }
}

#[test]
fn degree_equals_length_and_duality() {
    let mut types: Vec<DynkinType> = (4..=12).map(DynkinType::d).collect();
    types.extend([DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4(), DynkinType::g2(), DynkinType::b(5), DynkinType::c(4)]);
    for t in types {
        let x = CoadjointVariety::new(t).unwrap();
        for &a in x.basis() {
            let w = x.weyl_of_root(a).unwrap();
            assert_eq!(x.degree(x.root_of_weyl(w).unwrap()), w.length() as i64);
            let d = x.poincare_dual(a);
            assert_eq!(x.poincare_dual(d), a);
            assert_eq!(x.degree(a) + x.degree(d), x.dim);
        }
    }
}

#[test]
fn quantum_chevalley_cases_are_disjoint_and_homogeneous() {
    let mut types: Vec<DynkinType> = (4..=12).map(DynkinType::d).collect();
    types.extend([DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4(), DynkinType::g2(), DynkinType::b(4), DynkinType::c(4)]);
    for t in types {
        let x = CoadjointVariety::new(t).unwrap();
        for &a in x.basis() {
            let corr = x.quantum_correction(a).unwrap();
            for (k, b, _) in &corr {
                assert_eq!(x.degree(*b), x.degree(a) + 1 - *k as i64 * x.index_r, "{t} {}", x.rs.label(a));
            }
            let full = x.chevalley_quantum(&CohClass::basis(a)).unwrap();
            assert_eq!(full.specialize(&q(0)), x.chevalley_classical(&CohClass::basis(a)));
        }
        assert!(x.chevalley_classical(&CohClass::basis(x.point())).is_zero());
    }
}

#[test]
fn odd_quadrics_are_semisimple() {
    for t in [DynkinType::b(2), DynkinType::b(3), DynkinType::b(4), DynkinType::b(5), DynkinType::b(6), DynkinType::g2()] {
        let x = CoadjointVariety::new(t).unwrap();
        let cp = x.chevalley_matrix(&q(1)).unwrap().charpoly().unwrap();
        assert_eq!(cp.degree(), Some(x.basis().len()));
        assert!(cp.is_squarefree(), "{t}");
    }
}

fn all_foldings() -> Vec<FoldingMap> {
    [DynkinType::b(3), DynkinType::b(4), DynkinType::c(3), DynkinType::c(4), DynkinType::f4(), DynkinType::g2()]
        .into_iter()
        .map(|t| FoldingMap::for_target(t).unwrap())
        .collect()
}

#[test]
fn lifts_preserve_length_and_round_trip() {
    for f in all_foldings() {
        let x = CoadjointVariety::new(f.target).unwrap();
        let reps = f.tgt.min_coset_reps(&f.target_parabolic(), Some(x.dim as usize / 2));
        assert!(!reps.is_empty());
        for w in reps {
            let ws = f.w_star(&w).unwrap();
            assert_eq!(ws.length(), w.length());
            assert!(f.src.is_min_coset_rep(&ws, &f.source_parabolic()));
            assert_eq!(ws, f.src.coset_decompose(&f.pi_star(&w), &f.source_parabolic()).0);
            assert_eq!(f.pi_upper_star(&ws).unwrap(), w);
            assert_eq!(f.hat_star(&ws).unwrap(), w);
            assert_eq!(f.jstar(&ws, x.dim as usize).unwrap(), w);
        }
    }
}

fn admissible(f: &FoldingMap, v: &WeylElement, i: usize) -> usize {
    let vinv = f.src.inverse(v);
    f.preimage(i)
        .into_iter()
        .filter(|&b| {
            let r = f.src.act_idx(&vinv, f.src.simple(b));
            f.src.is_positive(r) && f.src.root(r)[f.source_node - 1] > 0
        })
        .count()
}

#[test]
fn admissible_letter_is_unique_below_half_dimension() {
    for f in all_foldings() {
        let x = CoadjointVariety::new(f.target).unwrap();
        let half = x.dim as usize / 2;
        for w in f.tgt.min_coset_reps(&f.target_parabolic(), Some(half - 1)) {
            let v = f.w_star(&w).unwrap();
            for i in 1..=f.target.rank {
                let sw = f.tgt.left_mul(i, &w);
                if sw.length() > w.length() && f.tgt.is_min_coset_rep(&sw, &f.target_parabolic()) {
                    assert_eq!(admissible(&f, &v, i), 1, "{} over {}", f.source, f.target);
                }
            }
        }
    }
}

#[test]
fn order_three_folding_avoids_the_split_pairing() {
    let f = FoldingMap::for_target(DynkinType::g2()).unwrap();
    let sn = f.source_node;
    for v in f.src.min_coset_reps(&f.source_parabolic(), None) {
        let vinv = f.src.inverse(&v);
        for i in 1..=2 {
            let mut pairings: Vec<i32> = f
                .preimage(i)
                .into_iter()
                .map(|b| f.src.root(f.src.act_idx(&vinv, f.src.simple(b)))[sn - 1])
                .collect();
            pairings.sort();
            assert_ne!(pairings, vec![-1, 1, 1]);
        }
    }
}

fn reduced_words(rs: &RootSystem, w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in (1..=rs.rank()).filter(|&i| w.has_right_descent(i)) {
        for mut v in reduced_words(rs, &rs.right_mul(w, i)) {
            v.push(i);
            out.push(v);
        }
    }
    out
}

#[test]
fn pi_upper_star_is_word_independent_below_half_dimension() {
    for f in all_foldings() {
        let x = CoadjointVariety::new(f.target).unwrap();
        for w in f.src.min_coset_reps(&f.source_parabolic(), None) {
            let words = reduced_words(&f.src, &w);
            let images: HashSet<WeylElement> = words.iter().map(|v| f.pi_upper_star_word(v)).collect();
            let invariant = f.image_is_commutation_invariant(&f.src.reduced_word(&w));
            assert_eq!(invariant, images.len() == 1, "{} {:?}", f.source, words[0]);
            assert_eq!(f.pi_upper_star(&w).is_ok(), invariant);
            if 2 * w.length() <= x.dim as usize {
                assert!(invariant, "{} {:?}", f.source, words[0]);
            }
            if matches!(f.target.family, coadqh_core::Family::B | coadqh_core::Family::G) {
                assert!(invariant);
            }
        }
    }
}

#[test]
fn f4_non_injectivity_pair() {
    let f = FoldingMap::for_target(DynkinType::f4()).unwrap();
    let target = f.tgt.from_word(&[3, 4, 2, 3, 1, 2, 3, 4]).unwrap();
    let (u, v) = ([3, 6, 4, 5, 2, 4, 3, 1], [5, 6, 4, 5, 2, 4, 3, 1]);
    assert_ne!(f.src.from_word(&u).unwrap(), f.src.from_word(&v).unwrap());
    assert_eq!(f.pi_upper_star_word(&u), target);
    assert_eq!(f.pi_upper_star_word(&v), target);
    assert_eq!(f.hat_star_word(&u), target);
    assert_eq!(f.hat_star_word(&v), target);
}
