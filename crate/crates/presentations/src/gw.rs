//! Degree-one invariants with a point insertion against the tables in
//! `fixtures/<type>/gw.json`.

use coadqh_core::lines::{named, Gw1};
use coadqh_core::{CoadjointVariety, CoreError, DynkinType, Family};
use coadqh_linalg::fmt_q;

use crate::fixtures::{family_gw_data, gw_data, FunctionalEntry, GwEntry};
use crate::products::rational;
use crate::report::VerificationReport;
use crate::PresError;

pub fn verify_gw(t: DynkinType) -> VerificationReport {
    let mut rep = VerificationReport::new(t.to_string(), "gw");
    if let Err(e) = gw_into(t, &mut rep) {
        rep.error("gw", e);
    }
    rep.finish()
}

fn gw_into(t: DynkinType, rep: &mut VerificationReport) -> Result<(), PresError> {
    let (invariants, functionals) = match t.family {
        Family::E | Family::F => {
            let d = gw_data(&t.to_string())?;
            (d.invariants, d.functionals)
        }
        Family::D => {
            let d = family_gw_data("D")?;
            let f = d.families.into_iter().find(|f| f.n == t.rank).ok_or_else(|| PresError::Unsupported(format!("no GW table for {t}")))?;
            (f.invariants, f.functionals)
        }
        _ => return Err(PresError::Unsupported(format!("no GW table for {t}"))),
    };
    let g = Gw1::new(CoadjointVariety::new(t)?)?;
    for e in &invariants {
        invariant(&g, e, rep)?;
    }
    for f in &functionals {
        functional(&g, f, rep)?;
    }
    Ok(())
}

fn invariant(g: &Gw1, e: &GwEntry, rep: &mut VerificationReport) -> Result<(), PresError> {
    let names: Vec<&str> = e.classes.iter().map(String::as_str).collect();
    let classes = named(g.x(), &names)?;
    let name = format!("<pt,{}>_1", names.join(","));
    let computed = match g.gw1(&classes) {
        Ok(v) => fmt_q(&v),
        Err(CoreError::Unbalanced { .. }) => "unbalanced".into(),
        Err(e) => format!("error: {e}"),
    };
    let expected = if e.value == "unbalanced" { e.value.clone() } else { fmt_q(&rational(&e.value)?) };
    rep.check(name, computed, expected);
    Ok(())
}

fn functional(g: &Gw1, f: &FunctionalEntry, rep: &mut VerificationReport) -> Result<(), PresError> {
    let x = g.x();
    let names: Vec<&str> = f.fixed.iter().map(String::as_str).collect();
    let fixed = named(x, &names)?;
    let mut expect: Vec<(usize, String)> = Vec::new();
    for (label, c) in &f.expect {
        expect.push((x.parse_class(label)?, fmt_q(&rational(c)?)));
    }
    expect.sort();
    let show = |v: &[(usize, String)]| v.iter().map(|(r, c)| format!("{c}*{}", x.rs.label(*r))).collect::<Vec<_>>().join(" + ");
    let expected = show(&expect);
    let name = format!("<pt,{},->_1", names.join(","));
    let route = |r: Result<Vec<(usize, coadqh_linalg::Q)>, CoreError>| {
        r.map(|v| {
            let mut v: Vec<(usize, String)> = v.into_iter().map(|(r, c)| (r, fmt_q(&c))).collect();
            v.sort();
            show(&v)
        })
    };
    rep.check_result(format!("{name} by extraction"), route(g.coeff_extract(&fixed)), &expected);
    rep.check_result(format!("{name} by evaluation"), route(g.functional_direct(&fixed)), &expected);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_table() {
        let r = verify_gw(DynkinType::f4());
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.checks.len() >= 3);
    }

    #[test]
    fn no_table_for_b() {
        assert!(!verify_gw(DynkinType::b(3)).passed());
    }
}
