//! Single queries: roots, coset data, products, bar classes and degree-one
//! invariants.

use coadqh_core::lines::{named, FoldedLineGeometry, Gw1, LineGeometry};
use coadqh_core::minuscule::{FxClass, FxSpace};
use coadqh_core::weyl::{format_word, parse_word};
use coadqh_core::{CohClass, CoadjointVariety, DynkinType, ParabolicSubset, Q};
use coadqh_linalg::fmt_q;
use coadqh_presentations::SchubertRing;
use serde_json::{json, Value};

use crate::{class_json, CliError};

/// Root counts and the Schubert basis of the coadjoint variety, ordered by
/// degree.
pub fn roots(t: DynkinType) -> Result<Value, CliError> {
    let x = CoadjointVariety::new(t)?;
    let rs = &x.rs;
    let short = (0..rs.len()).filter(|&i| rs.is_short(i)).count();
    let basis: Vec<Value> = x
        .basis()
        .iter()
        .map(|&r| {
            let w = x.weyl_of_root(r).map(|w| format_word(&rs.reduced_word(w))).unwrap_or_default();
            json!({ "root": rs.label(r), "degree": x.degree(r), "word": w })
        })
        .collect();
    Ok(json!({
        "type": t.to_string(),
        "roots": rs.len(),
        "positive": rs.n_positive(),
        "short": short,
        "node": x.node,
        "dim": x.dim,
        "index": x.index_r,
        "basis": basis,
    }))
}

/// Decomposes a word as `u = u^P u_P` for the coadjoint parabolic, or lists
/// the minimal coset representatives up to `max_len`.
pub fn coset(t: DynkinType, word: Option<&str>, max_len: Option<usize>) -> Result<Value, CliError> {
    let x = CoadjointVariety::new(t)?;
    let rs = &x.rs;
    let p = ParabolicSubset::new([x.node]);
    match word {
        Some(w) => {
            let u = rs.from_word(&parse_word(w)?)?;
            let (rep, par) = rs.coset_decompose(&u, &p);
            let root = x.root_of_weyl(&rep)?;
            Ok(json!({
                "word": format_word(&rs.reduced_word(&u)),
                "rep": format_word(&rs.reduced_word(&rep)),
                "parabolic": format_word(&rs.reduced_word(&par)),
                "root": rs.label(root),
                "degree": x.degree(root),
            }))
        }
        None => {
            let reps = rs.min_coset_reps(&p, max_len);
            let list: Vec<Value> = reps
                .iter()
                .map(|w| {
                    let root = x.root_of_weyl(w).map(|r| rs.label(r)).unwrap_or_default();
                    json!({ "word": format_word(&rs.reduced_word(w)), "length": w.length(), "root": root })
                })
                .collect();
            Ok(json!({ "count": list.len(), "reps": list }))
        }
    }
}

fn parse_classes(x: &CoadjointVariety, classes: &str) -> Result<Vec<CohClass>, CliError> {
    let names: Vec<&str> = split_classes(classes);
    if names.is_empty() {
        return Err(CliError::Usage("no classes given".into()));
    }
    Ok(named(x, &names)?)
}

/// Splits on commas outside brackets, so `w[3,4,2]` stays one class.
fn split_classes(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|c| !c.is_empty());
    out
}

/// Classical product of the given classes by localization, or with `q`
/// given, the quantum Chevalley action of the leading `h`s on the last class
/// at that value.
pub fn product(t: DynkinType, classes: &str, qv: Option<&Q>) -> Result<Value, CliError> {
    let x = CoadjointVariety::new(t)?;
    let cs = parse_classes(&x, classes)?;
    let value = match qv {
        None => {
            let ring = SchubertRing::new(t)?;
            let mut acc = ring.unit();
            for c in &cs {
                acc = ring.mul(&acc, c)?;
            }
            acc
        }
        Some(v) => {
            let (last, hs) = cs.split_last().expect("nonempty");
            let h = CohClass::basis(x.hyperplane());
            if hs.iter().any(|c| *c != h) {
                return Err(CliError::Usage("with --q every class but the last must be h".into()));
            }
            let mut acc = last.clone();
            for _ in hs {
                acc = x.chevalley_quantum(&acc)?;
            }
            acc.specialize(v)
        }
    };
    Ok(json!({ "value": class_json(&x, &value) }))
}

fn fx_json(fx: &FxSpace, c: &FxClass) -> Value {
    let terms: Vec<Value> = c.iter().map(|(k, v)| json!({ "class": fx.format_key(k), "degree": fx.degree_of(k), "coeff": fmt_q(v) })).collect();
    json!({ "terms": terms, "dim": fx.dim() })
}

/// The class of `F_x` attached to a class of `X`. For the folded case the
/// class is that of the lift on the simply-laced cover.
pub fn bar(t: DynkinType, class: &str) -> Result<Value, CliError> {
    let x = CoadjointVariety::new(t)?;
    let c = parse_classes(&x, class)?.remove(0);
    if x.is_simply_laced() {
        let g = LineGeometry::new(x)?;
        let b = g.bar(&c)?;
        Ok(json!({ "bar": fx_json(&g.lines.fx, &b) }))
    } else {
        let g = FoldedLineGeometry::new(x)?;
        let mut out = FxClass::new();
        for (k, r, v) in c.iter() {
            if k != 0 {
                return Err(CliError::Usage("bar of a quantum class".into()));
            }
            if let Some(key) = g.y.bar_key(&g.lift(r)?)? {
                *out.entry(key).or_default() += v;
            }
        }
        Ok(json!({ "bar": fx_json(&g.y.fx, &out), "via": g.fold.source.to_string() }))
    }
}

/// `<[pt], c_1, ..., c_n>_1`: the first class must be `pt`.
pub fn gw(t: DynkinType, classes: &str, degree: u32) -> Result<Value, CliError> {
    if degree != 1 {
        return Err(CliError::Usage(format!("only degree 1 is supported, got {degree}")));
    }
    let names = split_classes(classes);
    if names.first() != Some(&"pt") {
        return Err(CliError::Usage("the first insertion must be pt".into()));
    }
    let x = CoadjointVariety::new(t)?;
    let rest = named(&x, &names[1..])?;
    let g = Gw1::new(x)?;
    let v = g.gw1(&rest)?;
    Ok(json!({ "value": fmt_q(&v) }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadqh_linalg::q;

    #[test]
    fn e6_invariant() {
        assert_eq!(gw(DynkinType::e(6), "pt,t,t,t", 1).unwrap(), json!({ "value": "1" }));
        assert!(matches!(gw(DynkinType::e(6), "t,t,t", 1), Err(CliError::Usage(_))));
        assert!(matches!(gw(DynkinType::e(6), "pt,t,t", 1), Err(CliError::Usage(_))));
        assert!(matches!(gw(DynkinType::e(6), "pt,t,t,t", 2), Err(CliError::Usage(_))));
    }

    #[test]
    fn brackets_survive_splitting() {
        assert_eq!(split_classes("pt, w[3,4,2],a(010110)"), vec!["pt", "w[3,4,2]", "a(010110)"]);
    }

    #[test]
    fn root_counts() {
        let v = roots(DynkinType::e(6)).unwrap();
        assert_eq!(v["roots"], 72);
        assert_eq!(v["basis"].as_array().unwrap().len(), 72);
        assert_eq!(v["dim"], 21);
    }

    #[test]
    fn coset_of_a_long_word() {
        let v = coset(DynkinType::e(6), Some("s2s4s3s1s2"), None).unwrap();
        assert_eq!(v["rep"].as_str().unwrap().len() + v["parabolic"].as_str().unwrap().len(), v["word"].as_str().unwrap().len());
        assert_eq!(coset(DynkinType::g2(), None, None).unwrap()["count"], 6);
    }

    #[test]
    fn products() {
        let v = product(DynkinType::b(3), "h,h,h,h,h", None).unwrap();
        let x = CoadjointVariety::new(DynkinType::b(3)).unwrap();
        assert_eq!(v["value"]["text"], format!("2*{}", x.rs.label(x.point())));
        let v = product(DynkinType::d(4), "h,pt", Some(&q(1))).unwrap();
        assert_ne!(v["value"]["text"], "0");
        assert!(matches!(product(DynkinType::d(4), "t,pt", Some(&q(1))), Err(CliError::Usage(_))));
    }

    #[test]
    fn bars() {
        let v = bar(DynkinType::e(6), "t").unwrap();
        assert_eq!(v["bar"]["terms"].as_array().unwrap().len(), 1);
        let v = bar(DynkinType::f4(), "s").unwrap();
        assert_eq!(v["via"], "E6");
    }
}
