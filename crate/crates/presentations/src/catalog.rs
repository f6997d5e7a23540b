//! The catalog of presentations: generators with weights, relations with a
//! symbolic `q`, the first-order big deformations, and the Schubert
//! dictionary of the generators.

use std::str::FromStr;
use std::sync::Arc;

use coadqh_core::coadjoint::coadjoint_node;
use coadqh_core::{DynkinType, Family};
use coadqh_linalg::{parse_q, q, Q};
use coadqh_polyideal::{Ideal, Poly, Ring};

use crate::fixtures::presentation_data;
use crate::type_d::eq_polys;
use crate::PresError;

/// `(r, k, a)`: the degree of `q`, the number of extra generators, and their degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    pub r: i64,
    pub k: usize,
    pub a: Vec<i64>,
}

/// How the deformed relation is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformationForm {
    /// `R ≡ c q t (mod t m)`.
    Congruence,
    /// `R + c q t ≡ 0 (mod t m)`.
    Sum,
}

/// A first-order deformation of one relation along one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    pub relation: usize,
    /// Generator whose class is the deformation direction.
    pub direction: String,
    /// Name of the deformation parameter, `t_d1` or `t_d2`.
    pub parameter: String,
    pub coefficient: Q,
    pub form: DeformationForm,
    /// `(coeff, left, right)` terms: the relation written as products of two
    /// classes whose four-point invariants with the direction give the
    /// coefficient. Empty when the route is coded in `big`.
    pub route: Vec<(Q, String, String)>,
}

impl Deformation {
    /// `L` with `R^* ≡ L q t (mod t m)`.
    pub fn linear_term(&self) -> Q {
        match self.form {
            DeformationForm::Congruence => self.coefficient.clone(),
            DeformationForm::Sum => -self.coefficient.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PresentationSpec {
    pub tag: String,
    pub dynkin: DynkinType,
    pub ring: Arc<Ring>,
    pub relations: Vec<Poly>,
    pub constants: Constants,
    /// Generator name and its Schubert class, as a word or a special name.
    pub dictionary: Vec<(String, String)>,
    pub deformations: Vec<Deformation>,
    /// `ring` with the deformation parameters `t_d1, t_d2` of weight `1 - a_i`.
    pub big_ring: Arc<Ring>,
    pub deformation_relations: Vec<Poly>,
}

impl PresentationSpec {
    pub fn has_presentation(&self) -> bool {
        !self.relations.is_empty()
    }

    /// Names of the quantum parameters.
    pub fn quantum_variables(&self) -> Vec<String> {
        self.ring.names().iter().filter(|n| n.starts_with('q')).cloned().collect()
    }

    /// Names of the non-quantum generators.
    pub fn generators(&self) -> Vec<String> {
        self.ring.names().iter().filter(|n| !n.starts_with('q')).cloned().collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.relations.clone())
    }

    /// The ideal with every quantum parameter set to `v` and removed.
    pub fn ideal_at(&self, v: &Q) -> Result<Ideal, PresError> {
        let mut i = self.ideal();
        for name in self.quantum_variables() {
            i = i.specialize(&name, v)?;
        }
        Ok(i)
    }

    /// The parameter name paired with a direction generator.
    pub fn parameter_of(&self, direction: &str) -> Option<String> {
        let k = self.generators().iter().skip(1).position(|g| g == direction)?;
        Some(format!("t_d{}", k + 1))
    }

    /// The deformation relations rebuilt from `relations` and a table of
    /// linear terms `(relation, parameter, L)`.
    pub fn deform(&self, terms: &[(usize, String, Q)]) -> Result<Vec<Poly>, PresError> {
        let qv = Poly::var_named(&self.big_ring, "q")?;
        let mut out: Vec<Poly> = self.relations.iter().map(|r| r.to_ring(&self.big_ring)).collect::<Result<_, _>>()?;
        for (i, param, l) in terms {
            let t = Poly::var_named(&self.big_ring, param)?;
            out[*i] = &out[*i] - &(&qv * &t).scale(l);
        }
        Ok(out)
    }

    fn finish(mut self) -> Result<Self, PresError> {
        let extra: Vec<(String, i64)> = self.constants.a.iter().enumerate().map(|(i, a)| (format!("t_d{}", i + 1), 1 - a)).collect();
        let extra_ref: Vec<(&str, i64)> = extra.iter().map(|(n, w)| (n.as_str(), *w)).collect();
        self.big_ring = self.ring.extended(&extra_ref);
        let terms: Vec<(usize, String, Q)> =
            self.deformations.iter().map(|d| (d.relation, d.parameter.clone(), d.linear_term())).collect();
        self.deformation_relations = if self.has_presentation() && !terms.is_empty() { self.deform(&terms)? } else { Vec::new() };
        Ok(self)
    }
}

/// Parses a tag such as `E6`, `D5`, `A3`, `B4`, `G2`.
pub fn catalog_tag(tag: &str) -> Result<PresentationSpec, PresError> {
    let t = DynkinType::from_str(tag).map_err(|_| PresError::Unsupported(tag.to_string()))?;
    catalog(t)
}

pub fn catalog(t: DynkinType) -> Result<PresentationSpec, PresError> {
    match (t.family, t.rank) {
        (Family::E, _) | (Family::F, _) => from_fixture(t),
        (Family::D, n) if (4..=12).contains(&n) => type_d(n),
        (Family::A, n) if n >= 2 => type_a(n),
        (Family::B, _) | (Family::G, _) => quadric(t),
        _ => Err(PresError::Unsupported(t.to_string())),
    }
}

fn empty(t: DynkinType, ring: Arc<Ring>, relations: Vec<Poly>, constants: Constants) -> PresentationSpec {
    PresentationSpec {
        tag: t.to_string(),
        dynkin: t,
        big_ring: ring.clone(),
        ring,
        relations,
        constants,
        dictionary: Vec::new(),
        deformations: Vec::new(),
        deformation_relations: Vec::new(),
    }
}

fn from_fixture(t: DynkinType) -> Result<PresentationSpec, PresError> {
    let data = presentation_data(&t.to_string())?;
    let vars: Vec<(&str, i64)> = data.variables.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let ring = Ring::new(&vars);
    let relations = data.relations.iter().map(|r| Poly::parse(&ring, r)).collect::<Result<Vec<_>, _>>()?;
    let constants = Constants { r: data.constants.r, k: data.constants.k, a: data.constants.a.clone() };
    let mut spec = empty(t, ring, relations, constants);
    spec.dictionary = data.dictionary.clone();
    for d in &data.deformations {
        let parameter = spec.parameter_of(&d.direction).ok_or_else(|| PresError::Fixture(format!("unknown direction {}", d.direction)))?;
        let coefficient = rational(&d.coefficient)?;
        let route = d.route.iter().map(|(c, a, b)| Ok((rational(c)?, a.clone(), b.clone()))).collect::<Result<_, PresError>>()?;
        spec.deformations.push(Deformation {
            relation: d.relation,
            direction: d.direction.clone(),
            parameter,
            coefficient,
            form: DeformationForm::Congruence,
            route,
        });
    }
    spec.finish()
}

fn type_d(n: usize) -> Result<PresentationSpec, PresError> {
    let ni = n as i64;
    let ring = Ring::new(&[("h", 1), ("p", 2), ("gamma", ni - 2), ("q", 2 * ni - 3)]);
    let [eq_n, eq_2n4, eq_2n2] = eq_polys(&ring, n)?;
    let hq = Poly::parse(&ring, "4*h*q")?;
    let relations = vec![eq_n, eq_2n4, &eq_2n2 + &hq];
    let constants = Constants { r: 2 * ni - 3, k: 2, a: vec![2, ni - 2] };
    let mut spec = empty(DynkinType::d(n), ring, relations, constants);
    spec.dictionary = vec![("h".into(), "w[2]".into()), ("p".into(), "w[1,2]".into()), ("gamma".into(), "gamma".into())];
    let sign = if n.is_multiple_of(2) { q(1) } else { q(-1) };
    spec.deformations = vec![
        Deformation {
            relation: 0,
            direction: "gamma".into(),
            parameter: "t_d2".into(),
            coefficient: &sign * q(2),
            form: DeformationForm::Sum,
            route: Vec::new(),
        },
        Deformation {
            relation: 1,
            direction: "p".into(),
            parameter: "t_d1".into(),
            coefficient: &sign * q(4),
            form: DeformationForm::Sum,
            route: Vec::new(),
        },
    ];
    spec.finish()
}

fn type_a(n: usize) -> Result<PresentationSpec, PresError> {
    let ni = n as i64;
    let ring = Ring::new(&[("h1", 1), ("h2", 1), ("q1", ni), ("q2", ni)]);
    let terms: Vec<String> = (0..=n).map(|k| format!("h1^{k}*(-h2)^{}", n - k)).collect();
    let sign = if n.is_multiple_of(2) { "-" } else { "+" };
    let r1 = Poly::parse(&ring, &format!("{} - q1 {sign} q2", terms.join(" + ")))?;
    let r2 = Poly::parse(&ring, &format!("h1^{} - q1*(h1 + h2)", n + 1))?;
    let constants = Constants { r: ni, k: 0, a: Vec::new() };
    empty(DynkinType::a(n), ring, vec![r1, r2], constants).finish()
}

fn quadric(t: DynkinType) -> Result<PresentationSpec, PresError> {
    coadjoint_node(t)?;
    let r = match t.family {
        Family::B => 2 * t.rank as i64 - 1,
        _ => 5,
    };
    let ring = Ring::new(&[("h", 1), ("q", r)]);
    empty(t, ring, Vec::new(), Constants { r, k: 0, a: Vec::new() }).finish()
}

fn rational(s: &str) -> Result<Q, PresError> {
    parse_q(s).ok_or_else(|| PresError::Fixture(format!("bad rational {s}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_q() {
        assert_eq!(catalog_tag("E6").unwrap().constants.r, 11);
        assert_eq!(catalog_tag("E8").unwrap().constants.r, 29);
        for n in 4..=12 {
            let s = catalog(DynkinType::d(n)).unwrap();
            assert_eq!(s.constants.r, 2 * n as i64 - 3);
            assert_eq!(s.ring.weight(s.ring.index("q").unwrap()), s.constants.r);
        }
        assert_eq!(catalog_tag("E6").unwrap().relations.len(), 3);
    }

    #[test]
    fn every_relation_is_homogeneous() {
        let mut tags: Vec<String> = ["E6", "E7", "E8", "F4", "A2", "A3", "A6"].iter().map(|s| s.to_string()).collect();
        tags.extend((4..=12).map(|n| format!("D{n}")));
        for tag in tags {
            let s = catalog_tag(&tag).unwrap();
            for r in s.relations.iter().chain(&s.deformation_relations) {
                assert!(r.is_homogeneous(), "{tag}: {r}");
            }
        }
    }

    #[test]
    fn linear_terms_follow_the_written_form() {
        let e6 = catalog_tag("E6").unwrap();
        let l: Vec<Q> = e6.deformations.iter().map(Deformation::linear_term).collect();
        assert_eq!(l, vec![q(2), q(-2)]);
        let d5 = catalog_tag("D5").unwrap();
        let l: Vec<Q> = d5.deformations.iter().map(Deformation::linear_term).collect();
        assert_eq!(l, vec![q(2), q(4)]);
        assert_eq!(d5.deformations[0].parameter, "t_d2");
        assert_eq!(d5.big_ring.weight(d5.big_ring.index("t_d2").unwrap()), -2);
    }

    #[test]
    fn unsupported_tags() {
        assert!(matches!(catalog_tag("C3"), Err(PresError::Unsupported(_))));
        assert!(matches!(catalog_tag("D13"), Err(PresError::Unsupported(_))));
        assert!(catalog_tag("X1").is_err());
        let b = catalog_tag("B3").unwrap();
        assert!(!b.has_presentation());
        assert_eq!(b.constants.r, 5);
    }

    #[test]
    fn type_a_relations() {
        let s = catalog_tag("A2").unwrap();
        assert_eq!(s.relations[0], Poly::parse(&s.ring, "h1^2 - h1*h2 + h2^2 - q1 - q2").unwrap());
        assert_eq!(s.relations[1], Poly::parse(&s.ring, "h1^3 - q1*h1 - q1*h2").unwrap());
    }
}
