//! The acceptance suite: one group of checks per criterion, each recording
//! the claim, the computed value and the expected value.

use std::fmt::Display;
use std::time::Instant;

use coadqh_core::folding::FoldingMap;
use coadqh_core::lines::{named, FoldedLineGeometry, Gw1, LineGeometry};
use coadqh_core::minuscule::{Factor, FxClass, FxSpace, MinusculePoset};
use coadqh_core::weyl::format_word;
use coadqh_core::{q, CoadjointVariety, CoreError, DynkinType, ParabolicSubset};
use coadqh_linalg::fmt_q;
use coadqh_polyideal::{Ideal, MonomialOrder, Poly, Ring};
use coadqh_presentations::type_d::BorelQuotient;
use coadqh_presentations::{verify_big, verify_gw, verify_small, verify_spectral_match, Check, VerificationReport};
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 11;

#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: u8,
    /// Short key matched by `--filter`.
    pub key: &'static str,
    pub title: &'static str,
    run: fn(u64) -> Vec<Check>,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, key: "basis", title: "basis cardinalities", run: basis_cardinalities },
    Criterion { id: 2, key: "degree", title: "degree and duality combinatorics", run: degree_combinatorics },
    Criterion { id: 3, key: "minuscule", title: "minuscule fixtures", run: minuscule_fixtures },
    Criterion { id: 4, key: "gw", title: "degree-one invariant tables", run: gw_tables },
    Criterion { id: 5, key: "small", title: "small quantum cohomology", run: small_qh },
    Criterion { id: 6, key: "big", title: "big quantum deformations", run: big_qh },
    Criterion { id: 7, key: "spectral", title: "spectral cross-check", run: spectral },
    Criterion { id: 8, key: "folding", title: "folding round trips", run: folding },
    Criterion { id: 9, key: "properties", title: "property spot checks", run: properties },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u8,
    pub key: String,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl Criterion {
    pub fn run(&self, seed: u64) -> CriterionReport {
        let start = Instant::now();
        let checks = (self.run)(seed);
        let passed = !checks.is_empty() && checks.iter().all(|c| c.passed);
        CriterionReport { id: self.id, key: self.key.into(), title: self.title.into(), passed, checks, elapsed_ms: start.elapsed().as_millis() as u64 }
    }
}

/// Criteria whose key or title contains `filter`, or whose number equals it.
pub fn select(filter: Option<&str>) -> Vec<Criterion> {
    CRITERIA
        .iter()
        .filter(|c| match filter {
            None => true,
            Some(f) => c.key.contains(f) || c.title.contains(f) || c.id.to_string() == f,
        })
        .copied()
        .collect()
}

/// Runs the selected criteria on worker threads; results keep the criterion
/// order and a failing criterion does not stop the others.
pub fn run_all(filter: Option<&str>, seed: u64) -> SuiteReport {
    let chosen = select(filter);
    let criteria: Vec<CriterionReport> = std::thread::scope(|s| {
        let handles: Vec<_> = chosen.iter().map(|c| s.spawn(move || c.run(seed))).collect();
        handles
            .into_iter()
            .zip(&chosen)
            .map(|(h, c)| {
                h.join().unwrap_or_else(|_| CriterionReport {
                    id: c.id,
                    key: c.key.into(),
                    title: c.title.into(),
                    passed: false,
                    checks: vec![failed("criterion", "panicked")],
                    elapsed_ms: 0,
                })
            })
            .collect()
    });
    let passed = !criteria.is_empty() && criteria.iter().all(|c| c.passed);
    SuiteReport { seed, passed, criteria }
}

/// One line per check: claim, computed, expected, status.
pub fn summary_table(r: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &r.criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{status}] {}. {} ({} checks, {} ms)\n", c.id, c.title, c.checks.len(), c.elapsed_ms));
        for ch in &c.checks {
            let mark = if ch.passed { "ok" } else { "MISMATCH" };
            out.push_str(&format!("    {mark:8} {} | computed {} | expected {}\n", ch.name, ch.computed, ch.expected));
        }
    }
    out
}

fn check(name: impl Into<String>, computed: impl Display, expected: impl Display) -> Check {
    let (computed, expected) = (computed.to_string(), expected.to_string());
    Check { name: name.into(), passed: computed == expected, computed, expected }
}

fn failed(name: impl Into<String>, e: impl Display) -> Check {
    Check { name: name.into(), passed: false, computed: format!("error: {e}"), expected: "no error".into() }
}

fn absorb(out: &mut Vec<Check>, r: VerificationReport) {
    let prefix = format!("{} {}", r.tag, r.kind);
    if r.checks.is_empty() {
        out.push(failed(prefix.clone(), "no checks ran"));
    }
    out.extend(r.checks.into_iter().map(|mut c| {
        c.name = format!("{prefix}: {}", c.name);
        c
    }));
}

fn coadjoint_types() -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (4..=12).map(DynkinType::d).collect();
    v.extend([DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4(), DynkinType::g2()]);
    v.extend((2..=8).map(DynkinType::b));
    v
}

fn basis_cardinalities(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for t in coadjoint_types() {
        let n = t.rank;
        let expected = match t.family {
            coadqh_core::Family::D => 2 * n * (n - 1),
            coadqh_core::Family::E => [72, 126, 240][n - 6],
            coadqh_core::Family::F => 24,
            coadqh_core::Family::B => 2 * n,
            _ => 6,
        };
        match CoadjointVariety::new(t) {
            Ok(x) => {
                let reps = x.rs.min_coset_reps(&ParabolicSubset::new([x.node]), None).len();
                let short = (0..x.rs.len()).filter(|&i| x.rs.is_short(i)).count();
                out.push(check(format!("{t}: |W^P|"), reps, expected));
                out.push(check(format!("{t}: short roots"), short, expected));
                out.push(check(format!("{t}: basis"), x.basis().len(), expected));
            }
            Err(e) => out.push(failed(format!("{t}"), e)),
        }
    }
    out
}

fn degree_combinatorics(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut types = coadjoint_types();
    types.extend((3..=6).map(DynkinType::c));
    for t in types {
        let x = match CoadjointVariety::new(t) {
            Ok(x) => x,
            Err(e) => {
                out.push(failed(format!("{t}"), e));
                continue;
            }
        };
        let reps = x.rs.min_coset_reps(&ParabolicSubset::new([x.node]), None);
        let bad_degree = reps.iter().filter(|w| x.root_of_weyl(w).map(|r| x.degree(r) != w.length() as i64).unwrap_or(true)).count();
        out.push(check(format!("{t}: reps with degree != length"), bad_degree, 0));
        let roots: std::collections::HashSet<usize> = reps.iter().filter_map(|w| x.root_of_weyl(w).ok()).collect();
        out.push(check(format!("{t}: distinct roots"), roots.len(), reps.len()));
        let bad_dual = x
            .basis()
            .iter()
            .filter(|&&r| {
                let d = x.poincare_dual(r);
                x.poincare_dual(d) != r || x.degree(r) + x.degree(d) != x.dim
            })
            .count();
        out.push(check(format!("{t}: duality failures"), bad_dual, 0));
    }
    out
}

fn fmt_fx(fx: &FxSpace, c: &FxClass) -> String {
    if c.is_empty() {
        return "0".into();
    }
    c.iter().map(|(k, v)| format!("{}*{}", fmt_q(v), fx.format_key(k))).collect::<Vec<_>>().join(" + ")
}

fn poset(fx: &FxSpace) -> Result<&MinusculePoset, CoreError> {
    match &fx.factors[0] {
        Factor::Minuscule(p) => Ok(p),
        Factor::Quadric(_) => Err(CoreError::Invariant("expected a poset factor".into())),
    }
}

fn fx_words(p: &MinusculePoset, terms: &[(i64, &[usize])]) -> Result<FxClass, CoreError> {
    terms.iter().map(|(c, w)| Ok((vec![p.index_of_word(w)?], q(*c)))).collect()
}

fn minuscule_fixtures(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    if let Err(e) = minuscule_into(&mut out) {
        out.push(failed("minuscule fixtures", e));
    }
    out
}

fn minuscule_into(out: &mut Vec<Check>) -> Result<(), CoreError> {
    type Dual<'a> = &'a [(i64, &'a [usize])];
    let e8a: &[usize] = &[6, 7, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7];
    let e8b: &[usize] = &[7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7];
    let cases: [(DynkinType, &str, i64, Dual); 3] = [
        (DynkinType::e(6), "G(3,6)", 1, &[(1, &[5, 4, 1, 2, 3]), (1, &[3, 4, 1, 2, 3])]),
        (DynkinType::e(7), "OG(6,12)", 0, &[(1, &[6, 3, 4, 5, 1, 2, 3, 4, 6])]),
        (DynkinType::e(8), "E7/P7", 2, &[(2, e8a), (2, e8b)]),
    ];
    for (t, fx_name, cube, ss_dual) in cases {
        let g = LineGeometry::new(CoadjointVariety::new(t)?)?;
        let fx = &g.lines.fx;
        let p = poset(fx)?;
        let tb = g.bar(&g.x.named_class("t")?)?;
        let sb = g.bar(&g.x.named_class("s")?)?;
        let t3 = g.lines.product(&[tb.clone(), tb.clone(), tb]);
        let want: FxClass = if cube == 0 { FxClass::new() } else { [(fx.top(), q(cube))].into_iter().collect() };
        out.push(check(format!("{fx_name}: t^3"), fmt_fx(fx, &t3), fmt_fx(fx, &want)));
        let ss = g.lines.dualize(&g.lines.product(&[sb.clone(), sb]));
        out.push(check(format!("{fx_name}: dual of s s"), fmt_fx(fx, &ss), fmt_fx(fx, &fx_words(p, ss_dual)?)));
    }
    let f = FoldedLineGeometry::new(CoadjointVariety::new(DynkinType::f4())?)?;
    let s = f.x.named_class("s")?;
    let r = s.iter().next().map(|(_, r, _)| r).ok_or_else(|| CoreError::Invariant("empty class".into()))?;
    let key = f.y.bar_key(&f.lift(r)?)?.ok_or_else(|| CoreError::Invariant("lift of s has no bar".into()))?;
    let sb = f.y.fx.basis(key);
    let prod = f.y.product(&[sb.clone(), sb.clone(), sb, f.y.fx.hyperplane()]);
    out.push(check("D5/P4: s s s h", fmt_fx(&f.y.fx, &prod), fmt_fx(&f.y.fx, &f.y.fx.basis(f.y.fx.top()))));
    Ok(())
}

fn gw_tables(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut types = vec![DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4()];
    types.extend((4..=8).map(DynkinType::d));
    for t in types {
        absorb(&mut out, verify_gw(t));
    }
    out
}

fn small_qh(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut types = vec![DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4()];
    types.extend((4..=12).map(DynkinType::d));
    types.extend((2..=6).map(DynkinType::a));
    for t in types {
        absorb(&mut out, verify_small(t, seed));
    }
    out
}

fn big_qh(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut types = vec![DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4()];
    types.extend((4..=12).map(DynkinType::d));
    for t in types {
        absorb(&mut out, verify_big(t));
    }
    out
}

fn spectral(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut types: Vec<DynkinType> = (4..=8).map(DynkinType::d).collect();
    types.extend([DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4()]);
    for t in types {
        absorb(&mut out, verify_spectral_match(t, &q(1)));
    }
    out
}

fn folding(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    if let Err(e) = folding_into(&mut out) {
        out.push(failed("folding", e));
    }
    out
}

fn folding_into(out: &mut Vec<Check>) -> Result<(), CoreError> {
    let f = FoldingMap::for_target(DynkinType::f4())?;
    let reps = f.tgt.min_coset_reps(&f.target_parabolic(), Some(7));
    let (mut len_bad, mut trip_bad) = (0, 0);
    for w in &reps {
        let ws = f.w_star(w)?;
        if ws.length() != w.length() {
            len_bad += 1;
        }
        if f.pi_upper_star(&ws).as_ref() != Ok(w) {
            trip_bad += 1;
        }
    }
    out.push(check("F4: classes of length <= 7", reps.len(), 12));
    out.push(check("F4: length changes under w -> w_*", len_bad, 0));
    out.push(check("F4: round-trip failures", trip_bad, 0));
    let w = f.tgt.from_word(&[4, 2, 3, 1, 2, 3, 4])?;
    let ws = f.w_star(&w)?;
    let expected = f.src.from_word(&[6, 4, 5, 2, 4, 3, 1])?;
    out.push(check("F4: w_* of s4s2s3s1s2s3s4", format_word(&f.src.reduced_word(&ws)), format_word(&f.src.reduced_word(&expected))));
    let target = f.tgt.from_word(&[3, 4, 2, 3, 1, 2, 3, 4])?;
    let (u, v) = ([3, 6, 4, 5, 2, 4, 3, 1], [5, 6, 4, 5, 2, 4, 3, 1]);
    out.push(check("E6: distinct preimages", f.src.from_word(&u)? != f.src.from_word(&v)?, true));
    for word in [u, v] {
        let img = f.pi_upper_star_word(&word);
        out.push(check(format!("pi^* of {}", format_word(&word)), format_word(&f.tgt.reduced_word(&img)), format_word(&f.tgt.reduced_word(&target))));
    }
    Ok(())
}

fn properties(_: u64) -> Vec<Check> {
    let mut out = Vec::new();
    if let Err(e) = lr_properties(&mut out) {
        out.push(failed("LR properties", e));
    }
    if let Err(e) = groebner_properties(&mut out) {
        out.push(failed("Groebner properties", e));
    }
    if let Err(e) = gw_properties(&mut out) {
        out.push(failed("GW properties", e));
    }
    for n in 4..=12 {
        let r = BorelQuotient::new(n).and_then(|b| {
            let qr = b.ideal.groebner()?;
            Ok(b.sigma_minus_e()?.iter().filter(|d| !qr.normal_form(d).is_zero()).count())
        });
        match r {
            Ok(k) => out.push(check(format!("D{n}: NF(Sigma_j - E_j) nonzero"), k, 0)),
            Err(e) => out.push(failed(format!("D{n}: Borel identity"), e)),
        }
    }
    out
}

fn lr_properties(out: &mut Vec<Check>) -> Result<(), CoreError> {
    for (t, node) in [(DynkinType::a(5), 3), (DynkinType::d(5), 5), (DynkinType::e(6), 1)] {
        let p = MinusculePoset::new(t, node)?;
        let (mut neg, mut asym, mut deg) = (0, 0, 0);
        for u in 0..p.n_ideals() {
            for v in u..p.n_ideals() {
                let uv = p.lr(u, v);
                if uv != p.lr(v, u) {
                    asym += 1;
                }
                for (w, c) in &uv {
                    if !(c.is_integer() && *c > q(0)) {
                        neg += 1;
                    }
                    if p.size(*w) != p.size(u) + p.size(v) {
                        deg += 1;
                    }
                }
            }
        }
        out.push(check(format!("{t}/P{node}: nonpositive LR numbers"), neg, 0));
        out.push(check(format!("{t}/P{node}: asymmetric products"), asym, 0));
        out.push(check(format!("{t}/P{node}: degree violations"), deg, 0));
    }
    Ok(())
}

fn groebner_properties(out: &mut Vec<Check>) -> Result<(), coadqh_polyideal::PolyError> {
    let r = Ring::new(&[("h", 1), ("s", 3), ("t", 4)]);
    let i = Ideal::parse(
        &r,
        &[
            "h^8 - 6*h^5*s + 3*h^4*t + 9*h^2*s^2 - 12*h*s*t + 6*t^2",
            "h^9 - 4*h^6*s + 3*h^5*t + 3*h^3*s^2 - 6*h^2*s*t + 2*s^3",
            "-97*h^12 + 442*h^9*s - 247*h^8*t - 507*h^6*s^2 + 624*h^5*s*t - 156*h^2*s^2*t + 48*h",
        ],
    )?;
    let qr = i.groebner()?;
    let samples = ["h^13*s^2 - 7*t^5", "s^7 + h*t^6 - 2", "h^30 + s*t^9", "t^11 - h^3*s^4*t"];
    let mut bad = 0;
    for a in samples {
        let a = Poly::parse(&r, a)?;
        let nf = qr.normal_form(&a);
        if qr.normal_form(&nf) != nf {
            bad += 1;
        }
    }
    out.push(check("E6 quotient: NF idempotence failures", bad, 0));
    for names in [["h", "s", "t"], ["t", "s", "h"], ["s", "h", "t"]] {
        let order = MonomialOrder::with_precedence(&r, &names)?;
        out.push(check(format!("E6 quotient: dim with precedence {}", names.join(">")), i.reorder(order).groebner()?.dim().unwrap_or(0), 72));
    }
    Ok(())
}

fn gw_properties(out: &mut Vec<Check>) -> Result<(), CoreError> {
    let x = CoadjointVariety::new(DynkinType::e(6))?;
    let c5 = x.rs.label(x.basis_of_degree(5)[0]);
    let names = ["s".to_string(), "t".to_string(), c5];
    let g = Gw1::new(x)?;
    let base = g.gw1(&named(g.x(), &names.iter().map(String::as_str).collect::<Vec<_>>())?)?;
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut bad = 0;
    for p in perms {
        let v: Vec<&str> = p.iter().map(|&i| names[i].as_str()).collect();
        if g.gw1(&named(g.x(), &v)?)? != base {
            bad += 1;
        }
    }
    out.push(check("E6: <pt, s, t, c> permutation mismatches", bad, 0));
    let unbalanced = g.gw1(&named(g.x(), &["t", "t", "s"])?);
    out.push(check("E6: <pt, t, t, s> signals imbalance", matches!(unbalanced, Err(CoreError::Unbalanced { .. })), true));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert_eq!(select(Some("gw")).iter().map(|c| c.id).collect::<Vec<_>>(), vec![4]);
        assert_eq!(select(Some("7")).iter().map(|c| c.id).collect::<Vec<_>>(), vec![7]);
        assert_eq!(select(None).len(), 9);
        assert!(select(Some("nothing")).is_empty());
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 2, 3, 8, 9] {
            let r = CRITERIA[id - 1].run(DEFAULT_SEED);
            let failures: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
            assert!(r.passed, "criterion {id}: {failures:#?}");
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = run_all(Some("folding"), 3);
        let s = serde_json::to_string(&r).unwrap();
        let back: SuiteReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(summary_table(&r).starts_with("[PASS] 8."));
    }
}
