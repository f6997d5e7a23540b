//! Schubert expansions of products of the generators, with the classes
//! fixed by hard Lefschetz, and their consistency checks.

use std::collections::HashMap;

use coadqh_core::{CoadjointVariety, CohClass, DynkinType, Family};
use coadqh_linalg::{parse_q, q, Q};
use coadqh_polyideal::{Mono, Poly};

use crate::catalog::{catalog, PresentationSpec};
use crate::classical::SchubertRing;
use crate::fixtures::product_data;
use crate::report::VerificationReport;
use crate::type_d::e_polys;
use crate::PresError;

#[derive(Clone, Debug)]
pub struct ProductFixture {
    pub name: String,
    pub lhs: Poly,
    pub rhs: CohClass,
    pub source: String,
}

/// A class `rhs` characterized either by `h * rhs = lhs` or by `rhs = lhs`.
#[derive(Clone, Debug)]
pub struct LefschetzFixture {
    pub name: String,
    pub lhs: Poly,
    pub divided_by_h: bool,
    pub rhs: CohClass,
}

/// The product and Lefschetz data of one type together with the
/// evaluator that reads polynomials through them.
pub struct FixtureSet {
    pub spec: PresentationSpec,
    pub x: CoadjointVariety,
    pub generators: Vec<(String, CohClass)>,
    pub products: Vec<ProductFixture>,
    pub lefschetz: Vec<LefschetzFixture>,
    by_monomial: HashMap<Mono, CohClass>,
}

impl FixtureSet {
    pub fn new(t: DynkinType) -> Result<Self, PresError> {
        let spec = catalog(t)?;
        let x = CoadjointVariety::new(t)?;
        let generators = spec.dictionary.iter().map(|(g, w)| Ok((g.clone(), x.named_class(w)?))).collect::<Result<Vec<_>, PresError>>()?;
        let products = product_fixtures(t)?;
        let lefschetz = lefschetz_fixtures(&spec, &x)?;
        let by_monomial = products
            .iter()
            .filter(|p| p.lhs.len() == 1)
            .filter_map(|p| {
                let (m, c) = p.lhs.terms().iter().next()?;
                Some((m.clone(), p.rhs.scale(&(q(1) / c))))
            })
            .collect();
        Ok(FixtureSet { spec, x, generators, products, lefschetz, by_monomial })
    }

    /// Evaluates a polynomial from the fixtures alone: each monomial is
    /// `h^k m0`, with `m0` the unit, a generator, or a fixture monomial.
    pub fn eval(&self, p: &Poly) -> Result<CohClass, PresError> {
        let ring = p.ring();
        let h = ring.index("h").ok_or_else(|| PresError::Fixture("no variable h".into()))?;
        let mut out = CohClass::zero();
        for (m, c) in p.terms() {
            let mut rest = m.clone();
            let k = std::mem::take(&mut rest[h]);
            let support: Vec<usize> = (0..rest.len()).filter(|&i| rest[i] > 0).collect();
            let mut v = match support.as_slice() {
                [] => CohClass::basis(self.x.fundamental()),
                [i] if rest[*i] == 1 => self.generator(ring.name(*i))?,
                _ => self
                    .by_monomial
                    .get(&rest)
                    .cloned()
                    .ok_or_else(|| PresError::Fixture(format!("no product fixture for {}", Poly::monomial(ring, rest.clone(), q(1)))))?,
            };
            for _ in 0..k {
                v = self.x.chevalley_classical(&v);
            }
            out = out.add(&v.scale(c));
        }
        Ok(out)
    }

    pub fn parse_eval(&self, s: &str) -> Result<CohClass, PresError> {
        self.eval(&Poly::parse(&self.spec.ring, s)?)
    }

    pub fn generator(&self, name: &str) -> Result<CohClass, PresError> {
        self.generators.iter().find(|(g, _)| g == name).map(|(_, c)| c.clone()).ok_or_else(|| PresError::Fixture(format!("unknown generator {name}")))
    }

    /// A generator, a product fixture or a Lefschetz class by name.
    pub fn class_named(&self, name: &str) -> Result<CohClass, PresError> {
        if let Ok(c) = self.generator(name) {
            return Ok(c);
        }
        if let Some(p) = self.products.iter().find(|p| p.name == name) {
            return Ok(p.rhs.clone());
        }
        if let Some(l) = self.lefschetz.iter().find(|l| l.name == name) {
            return Ok(l.rhs.clone());
        }
        Err(PresError::Fixture(format!("unknown class {name}")))
    }

    /// The polynomial a route name stands for: a generator or a product
    /// fixture's left side.
    pub fn poly_named(&self, name: &str) -> Result<Poly, PresError> {
        if self.spec.ring.index(name).is_some() {
            return Ok(Poly::var_named(&self.spec.ring, name)?);
        }
        self.products.iter().find(|p| p.name == name).map(|p| p.lhs.clone()).ok_or_else(|| PresError::Fixture(format!("{name} has no polynomial")))
    }
}

fn parse_class(x: &CoadjointVariety, terms: &[(String, String)]) -> Result<CohClass, PresError> {
    let mut out = CohClass::zero();
    for (label, c) in terms {
        let c = parse_q(c).ok_or_else(|| PresError::Fixture(format!("bad rational {c}")))?;
        out = out.add(&x.named_class(label)?.scale(&c));
    }
    Ok(out)
}

/// The product fixtures of a type: data files for E and F4, and the
/// simple-root expansions of `h^2`, `E_{n-2}(h, p)` and `gamma^2` for D.
pub fn product_fixtures(t: DynkinType) -> Result<Vec<ProductFixture>, PresError> {
    let spec = catalog(t)?;
    let x = CoadjointVariety::new(t)?;
    match t.family {
        Family::E | Family::F => {
            let data = product_data(&t.to_string())?;
            data.products
                .iter()
                .map(|p| {
                    Ok(ProductFixture {
                        name: p.name.clone(),
                        lhs: Poly::parse(&spec.ring, &p.lhs)?,
                        rhs: parse_class(&x, &p.rhs)?,
                        source: format!("{t}/products.json"),
                    })
                })
                .collect()
        }
        Family::D => type_d_products(&spec, &x),
        _ => Ok(Vec::new()),
    }
}

/// `Sigma_{n-2} = 2 sum_{i<=n-2} (-1)^(i-1) sigma_{alpha_i} + (-1)^n (sigma_{alpha_{n-1}} + sigma_{alpha_n})`.
pub fn type_d_sigma(x: &CoadjointVariety) -> CohClass {
    let n = x.dynkin.rank;
    let mut s = CohClass::zero();
    for i in 1..=n - 2 {
        s.add_term(0, x.rs.simple(i), if i % 2 == 1 { q(2) } else { q(-2) });
    }
    let e = if n.is_multiple_of(2) { q(1) } else { q(-1) };
    s.add_term(0, x.rs.simple(n - 1), e.clone());
    s.add_term(0, x.rs.simple(n), e);
    s
}

fn type_d_products(spec: &PresentationSpec, x: &CoadjointVariety) -> Result<Vec<ProductFixture>, PresError> {
    let n = x.dynkin.rank;
    let ring = &spec.ring;
    let mut h2 = x.named_class("tau2")?.add(&x.named_class("p")?);
    if n == 4 {
        h2 = h2.add(&x.named_class("tau'")?);
    }
    let sigma = type_d_sigma(x);
    let sign = if n.is_multiple_of(2) { q(1) } else { q(-1) };
    let e = e_polys(ring, n - 2)?;
    let src = "type D dictionary".to_string();
    Ok(vec![
        ProductFixture { name: "one".into(), lhs: Poly::one(ring), rhs: CohClass::basis(x.fundamental()), source: src.clone() },
        ProductFixture { name: "h2".into(), lhs: Poly::parse(ring, "h^2")?, rhs: h2, source: src.clone() },
        ProductFixture { name: "E".into(), lhs: e[n - 2].clone(), rhs: sigma.clone(), source: src.clone() },
        ProductFixture { name: "gamma2".into(), lhs: Poly::parse(ring, "gamma^2")?, rhs: sigma.scale(&sign), source: src },
    ])
}

fn lefschetz_fixtures(spec: &PresentationSpec, x: &CoadjointVariety) -> Result<Vec<LefschetzFixture>, PresError> {
    if !matches!(x.dynkin.family, Family::E | Family::F) {
        return Ok(Vec::new());
    }
    let data = product_data(&x.dynkin.to_string())?;
    data.lefschetz
        .iter()
        .map(|l| {
            let (text, divided_by_h) = match (&l.h_times, &l.value) {
                (Some(h), None) => (h, true),
                (None, Some(v)) => (v, false),
                _ => return Err(PresError::Fixture(format!("{}: give exactly one of h_times and value", l.name))),
            };
            Ok(LefschetzFixture { name: l.name.clone(), lhs: Poly::parse(&spec.ring, text)?, divided_by_h, rhs: parse_class(x, &l.rhs)? })
        })
        .collect()
}

/// Degrees, an independent recomputation of every product by localization,
/// and the hard Lefschetz chains linking the fixtures.
pub fn verify_products(t: DynkinType, oracle: Option<&SchubertRing>) -> VerificationReport {
    let mut rep = VerificationReport::new(t.to_string(), "products");
    if let Err(e) = products_into(t, oracle, &mut rep) {
        rep.error("products", e);
    }
    rep.finish()
}

fn products_into(t: DynkinType, oracle: Option<&SchubertRing>, rep: &mut VerificationReport) -> Result<(), PresError> {
    let set = FixtureSet::new(t)?;
    let x = &set.x;
    for p in &set.products {
        let deg = p.lhs.homogeneous_degree().map(|d| d.to_string()).unwrap_or_else(|| "inhomogeneous".into());
        let cdeg = x.class_degree(&p.rhs).map(|d| d.to_string()).unwrap_or_else(|| "inhomogeneous".into());
        rep.check(format!("{}: degree", p.name), cdeg, deg);
        if let Some(o) = oracle {
            let dict = o.resolve(&set.spec.dictionary)?;
            rep.check_result(format!("{}: localization", p.name), o.eval(&p.lhs, &dict).map(|c| x.format_class(&c)), x.format_class(&p.rhs));
        }
    }
    for l in &set.lefschetz {
        let target = set.eval(&l.lhs)?;
        if l.divided_by_h {
            rep.check(format!("{}: h * class", l.name), x.format_class(&x.chevalley_classical(&l.rhs)), x.format_class(&target));
            rep.check_result(format!("{}: Lefschetz solve", l.name), x.lefschetz_solve(&target).map(|c| x.format_class(&c)), x.format_class(&l.rhs));
        } else {
            rep.check(format!("{}: value", l.name), x.format_class(&target), x.format_class(&l.rhs));
        }
    }
    if t.family == Family::D {
        let n = t.rank;
        let chain = x.chevalley_classical(&type_d_sigma(x));
        let expect = x.named_class(&format!("tau{}", 2 * n - 3))?.scale(&q(2));
        rep.check("h * Sigma_{n-2}", x.format_class(&chain), x.format_class(&expect));
    }
    Ok(())
}

/// Scalar helper for expected values.
pub(crate) fn rational(s: &str) -> Result<Q, PresError> {
    parse_q(s).ok_or_else(|| PresError::Fixture(format!("bad rational {s}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_fixture_is_trivial() {
        let set = FixtureSet::new(DynkinType::e(6)).unwrap();
        let one = set.products.iter().find(|p| p.name == "one").unwrap();
        assert_eq!(one.rhs, CohClass::basis(set.x.fundamental()));
        assert_eq!(set.x.class_degree(&one.rhs), Some(0));
    }

    #[test]
    fn e6_t_squared() {
        let set = FixtureSet::new(DynkinType::e(6)).unwrap();
        let t2 = set.parse_eval("t^2").unwrap();
        assert_eq!(t2, set.x.named_class("a(010110)").unwrap());
        assert!(set.parse_eval("s*t").is_err());
    }

    #[test]
    fn e8_t_squared_coefficients() {
        let set = FixtureSet::new(DynkinType::e(8)).unwrap();
        let t2 = set.class_named("t2").unwrap();
        let mut coeffs: Vec<Q> = t2.iter().map(|(_, _, c)| c.clone()).collect();
        coeffs.sort();
        let mut expect: Vec<Q> = [4, 7, 8, 16, 2, 14].iter().map(|&c| q(c)).collect();
        expect.sort();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn chains_hold_without_the_oracle() {
        for t in [DynkinType::e(6), DynkinType::e(7), DynkinType::e(8), DynkinType::f4(), DynkinType::d(4), DynkinType::d(7)] {
            let r = verify_products(t, None);
            assert!(r.passed(), "{t}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
