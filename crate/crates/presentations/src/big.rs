//! First-order big quantum deformations: the linear coefficients recomputed
//! from four-point degree-one invariants, and the Jacobian rank at the origin.
//!
//! Every deformed relation has degree below `deg q`, so only the last
//! multiplication of each monomial sees the deformation and the coefficient
//! of `q t_delta` at the unit is `sum c <P(m / g), g, delta, [pt]>_1`.

use coadqh_core::lines::Gw1;
use coadqh_core::{CoadjointVariety, CohClass, DynkinType, Family};
use coadqh_linalg::{fmt_q, q, Q};
use coadqh_polyideal::{jacobian_rank_at, Poly};
use num_traits::Zero;

use crate::catalog::{catalog, PresentationSpec};
use crate::classical::SchubertRing;
use crate::products::FixtureSet;
use crate::report::VerificationReport;
use crate::type_d::e_polys;
use crate::PresError;

pub struct BigContext {
    pub spec: PresentationSpec,
    pub gw: Gw1,
    pub ring: SchubertRing,
    pub fixtures: FixtureSet,
    dictionary: Vec<(String, CohClass)>,
}

impl BigContext {
    pub fn new(t: DynkinType) -> Result<Self, PresError> {
        let spec = catalog(t)?;
        if spec.deformations.is_empty() {
            return Err(PresError::Unsupported(format!("{t} has no big deformation in the catalog")));
        }
        let gw = Gw1::new(CoadjointVariety::new(t)?)?;
        let ring = SchubertRing::new(t)?;
        let fixtures = FixtureSet::new(t)?;
        let dictionary = ring.resolve(&spec.dictionary)?;
        Ok(BigContext { spec, gw, ring, fixtures, dictionary })
    }

    fn x(&self) -> &CoadjointVariety {
        self.gw.x()
    }

    fn class(&self, generator: &str) -> Result<CohClass, PresError> {
        self.dictionary.iter().find(|(g, _)| g == generator).map(|(_, c)| c.clone()).ok_or_else(|| PresError::Fixture(format!("unknown generator {generator}")))
    }

    fn gw4(&self, a: &CohClass, b: &CohClass, delta: &CohClass) -> Result<Q, PresError> {
        if a.is_zero() || b.is_zero() {
            return Ok(Q::zero());
        }
        Ok(self.gw.gw1(&[a.clone(), b.clone(), delta.clone()])?)
    }

    /// Generic route: peel `h` from each monomial if present, otherwise its
    /// last variable, and multiply the rest classically by localization.
    pub fn linear_term_generic(&self, relation: usize, direction: &str) -> Result<Q, PresError> {
        let r = &self.spec.relations[relation];
        let ring = r.ring();
        let delta = self.class(direction)?;
        let mut total = Q::zero();
        for (m, c) in r.terms() {
            let g = match ring.index("h").filter(|&i| m[i] > 0) {
                Some(i) => i,
                None => (0..m.len()).rev().find(|&i| m[i] > 0).ok_or_else(|| PresError::Fixture("constant term in a relation".into()))?,
            };
            if ring.name(g).starts_with('q') {
                return Err(PresError::Fixture("quantum term in a deformed relation".into()));
            }
            let mut rest = m.clone();
            rest[g] -= 1;
            let p = self.ring.eval(&Poly::monomial(ring, rest, q(1)), &self.dictionary)?;
            total += c * self.gw4(&p, &self.class(ring.name(g))?, &delta)?;
        }
        Ok(total)
    }

    /// Route of the fixture data: `sum coeff <left, right, delta, [pt]>_1`
    /// over the written form of the relation.
    pub fn linear_term_route(&self, route: &[(Q, String, String)], direction: &str) -> Result<Q, PresError> {
        let delta = self.class(direction)?;
        let mut total = Q::zero();
        for (c, a, b) in route {
            let (a, b) = (self.fixtures.class_named(a)?, self.fixtures.class_named(b)?);
            total += c * self.gw4(&a, &b, &delta)?;
        }
        Ok(total)
    }

    /// Type D: `EQ_n = p gamma` gives `<p, gamma, delta>`, and
    /// `EQ_{2n-4} = gamma^2 + (-1)^(n-1) (h h^{2n-5} + p tau)` with
    /// `tau = (E_{n-2} - h^{2n-4}) / p`.
    pub fn linear_term_type_d(&self, relation: usize, direction: &str) -> Result<Q, PresError> {
        let n = self.spec.dynkin.rank;
        let delta = self.class(direction)?;
        let (h, p, g) = (self.class("h")?, self.class("p")?, self.class("gamma")?);
        match relation {
            0 => self.gw4(&p, &g, &delta),
            1 => {
                let x = self.x();
                let mut hp = CohClass::basis(x.fundamental());
                for _ in 0..2 * n - 5 {
                    hp = x.chevalley_classical(&hp);
                }
                let mut e = self.gw4(&h, &hp, &delta)?;
                if !self.gw.functional_direct(&[p.clone(), delta.clone()])?.is_empty() {
                    let tau = self.fixtures.eval(&tau_poly(&self.spec, n)?)?;
                    e += self.gw4(&p, &tau, &delta)?;
                }
                let sign = if n.is_multiple_of(2) { q(-1) } else { q(1) };
                Ok(self.gw4(&g, &g, &delta)? + sign * e)
            }
            _ => Err(PresError::Unsupported(format!("relation {relation} is not deformed"))),
        }
    }

    pub fn linear_term_written(&self, relation: usize, direction: &str, route: &[(Q, String, String)]) -> Result<Q, PresError> {
        if self.spec.dynkin.family == Family::D {
            self.linear_term_type_d(relation, direction)
        } else {
            self.linear_term_route(route, direction)
        }
    }
}

/// `(E_{n-2}(h, p) - h^{2n-4}) / p` in the presentation ring.
pub fn tau_poly(spec: &PresentationSpec, n: usize) -> Result<Poly, PresError> {
    let ring = &spec.ring;
    let e = e_polys(ring, n - 2)?;
    let diff = &e[n - 2] - &Poly::parse(ring, &format!("h^{}", 2 * n - 4))?;
    let pi = ring.index("p").expect("type D ring");
    let mut terms = Vec::new();
    for (m, c) in diff.terms() {
        if m[pi] == 0 {
            return Err(PresError::Fixture("E_{n-2} - h^{2n-4} is not divisible by p".into()));
        }
        let mut m = m.clone();
        m[pi] -= 1;
        terms.push((m, c.clone()));
    }
    Ok(Poly::from_terms(ring, terms))
}

pub fn verify_big(t: DynkinType) -> VerificationReport {
    let mut rep = VerificationReport::new(t.to_string(), "big");
    if let Err(e) = big_into(t, &mut rep) {
        rep.error("big", e);
    }
    rep.finish()
}

fn big_into(t: DynkinType, rep: &mut VerificationReport) -> Result<(), PresError> {
    let ctx = BigContext::new(t)?;
    let spec = &ctx.spec;
    let mut terms: Vec<(usize, String, Q)> = Vec::new();
    for d in &spec.deformations {
        let name = format!("relation {} along {}", d.relation, d.direction);
        let expected = fmt_q(&d.linear_term());
        rep.check_result(format!("{name}: written route"), ctx.linear_term_written(d.relation, &d.direction, &d.route).map(|v| fmt_q(&v)), &expected);
        let generic = ctx.linear_term_generic(d.relation, &d.direction);
        if let Ok(l) = &generic {
            terms.push((d.relation, d.parameter.clone(), l.clone()));
        }
        rep.check_result(format!("{name}: generic route"), generic.map(|v| fmt_q(&v)), &expected);
        if !d.route.is_empty() {
            route_consistency(&ctx, d.relation, &d.route, rep)?;
        }
    }
    off_diagonal(&ctx, rep, &mut terms)?;

    let big = spec.deform(&terms)?;
    for (k, r) in big.iter().enumerate() {
        rep.check_bool(format!("deformed relation {k} homogeneous"), r.is_homogeneous());
    }
    let catalog_rels: Vec<String> = spec.deformation_relations.iter().map(|p| p.to_string()).collect();
    let rebuilt: Vec<String> = big.iter().map(|p| p.to_string()).collect();
    rep.check("deformed relations rebuilt from the invariants", rebuilt.join("; "), catalog_rels.join("; "));

    let point: Vec<(&str, Q)> = spec.big_ring.names().iter().map(|n| (n.as_str(), if n == "q" { q(1) } else { q(0) })).collect();
    let rank = jacobian_rank_at(&big, &point)?;
    rep.check("Jacobian rank at the origin", rank, spec.relations.len());
    Ok(())
}

/// For equal direction degrees (only `D4`) each deformed relation may also
/// move along the other direction; those coefficients must vanish.
fn off_diagonal(ctx: &BigContext, rep: &mut VerificationReport, terms: &mut Vec<(usize, String, Q)>) -> Result<(), PresError> {
    let spec = &ctx.spec;
    for d in &spec.deformations {
        for other in &spec.deformations {
            if other.direction == d.direction {
                continue;
            }
            let w_d = spec.big_ring.weight(spec.big_ring.index(&d.parameter).expect("parameter"));
            let w_o = spec.big_ring.weight(spec.big_ring.index(&other.parameter).expect("parameter"));
            if w_d != w_o {
                continue;
            }
            let name = format!("relation {} along {}", d.relation, other.direction);
            rep.check_result(format!("{name}: written route"), ctx.linear_term_written(d.relation, &other.direction, &[]).map(|v| fmt_q(&v)), "0");
            let generic = ctx.linear_term_generic(d.relation, &other.direction);
            if let Ok(l) = &generic {
                if !l.is_zero() {
                    terms.push((d.relation, other.parameter.clone(), l.clone()));
                }
            }
            rep.check_result(format!("{name}: generic route"), generic.map(|v| fmt_q(&v)), "0");
        }
    }
    Ok(())
}

/// The written form reproduces the relation: its `h`-free part as a
/// polynomial, and its `h` part through the Lefschetz class it names.
fn route_consistency(ctx: &BigContext, relation: usize, route: &[(Q, String, String)], rep: &mut VerificationReport) -> Result<(), PresError> {
    let spec = &ctx.spec;
    let r = &spec.relations[relation];
    let hi = spec.ring.index("h").expect("h");
    let h_free = Poly::from_terms(&spec.ring, r.terms().iter().filter(|(m, _)| m[hi] == 0).map(|(m, c)| (m.clone(), c.clone())));
    let mut written = Poly::zero(&spec.ring);
    let mut h_part = CohClass::zero();
    for (c, a, b) in route {
        if a == "h" {
            h_part = h_part.add(&ctx.fixtures.class_named(b)?.scale(c));
        } else {
            written = &written + &(&ctx.fixtures.poly_named(a)? * &ctx.fixtures.poly_named(b)?).scale(c);
        }
    }
    rep.check(format!("relation {relation}: h-free part of the written form"), written.to_string(), h_free.to_string());
    let x = ctx.x();
    let (h_free_class, how) = match ctx.fixtures.eval(&written) {
        Ok(c) => (c, "fixtures"),
        Err(_) => (ctx.ring.eval(&written, &ctx.dictionary)?, "localization"),
    };
    let chain = x.chevalley_classical(&h_part).add(&h_free_class);
    rep.check(format!("relation {relation}: Lefschetz chain ({how})"), x.format_class(&chain), "0");
    Ok(())
}
