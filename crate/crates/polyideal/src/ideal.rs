//! Ideals, reduced Groebner bases and zero-dimensional quotient rings.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use coadqh_linalg::{Matrix, UPoly, Q};
use num_traits::Zero;

use crate::groebner::{self, Encoding, IPoly, QPoly};
use crate::order::MonomialOrder;
use crate::poly::{Mono, Poly, Ring};
use crate::PolyError;

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
    order: MonomialOrder,
}

/// How the Groebner basis is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Buchberger directly on the generators.
    Direct,
    /// Homogenize with a weight-one variable ordered last, compute, and
    /// set it back to one. Falls back to `Direct` for block orders.
    Homogenize,
}

impl Ideal {
    /// Ideal under weighted degrevlex in declaration order. Zero
    /// generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Ideal {
        let order = MonomialOrder::degrevlex(ring.nvars());
        Ideal::with_order(ring, gens, order)
    }

    pub fn with_order(ring: &Arc<Ring>, gens: Vec<Poly>, order: MonomialOrder) -> Ideal {
        assert_eq!(order.nvars(), ring.nvars());
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, order }
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal, PolyError> {
        let gens = gens.iter().map(|s| Poly::parse(ring, s)).collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn reorder(&self, order: MonomialOrder) -> Ideal {
        Ideal::with_order(&self.ring, self.gens.clone(), order)
    }

    /// `I + (extra)`.
    pub fn plus(&self, extra: &[Poly]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::with_order(&self.ring, gens, self.order.clone())
    }

    /// Substitutes `value` for the variable `name` and drops it from the ring.
    pub fn specialize(&self, name: &str, value: &Q) -> Result<Ideal, PolyError> {
        let i = self.ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let ring = self.ring.without(&[i]);
        let gens = self.gens.iter().map(|g| g.specialize(i, value).to_ring(&ring)).collect::<Result<Vec<_>, _>>()?;
        let mut blocks = Vec::new();
        let mut start = 0;
        for &len in self.order.block_sizes() {
            let block = self.order.precedence()[start..start + len].iter().filter(|&&v| v != i);
            blocks.push(block.map(|&v| if v > i { v - 1 } else { v }).collect());
            start += len;
        }
        let order = MonomialOrder::blocks(ring.nvars(), blocks)?;
        Ok(Ideal::with_order(&ring, gens, order))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    pub fn groebner(&self) -> Result<QuotientRing, PolyError> {
        self.groebner_with(Strategy::Direct)
    }

    pub fn groebner_with(&self, strategy: Strategy) -> Result<QuotientRing, PolyError> {
        if let Some(i) = (0..self.ring.nvars()).find(|&i| self.ring.weight(i) <= 0) {
            return Err(PolyError::BadOrder(format!("variable {} has nonpositive weight", self.ring.name(i))));
        }
        let enc = Encoding::new(&self.ring, &self.order);
        let single_block = self.order.block_sizes().len() <= 1;
        let gb = if strategy == Strategy::Homogenize && single_block && !self.is_homogeneous() {
            self.homogenized_basis(&enc)?
        } else {
            groebner::buchberger(&enc, self.gens.iter().map(|g| groebner::to_ipoly(&enc, g)).collect())
        };
        Ok(QuotientRing::from_basis(enc, gb))
    }

    fn homogenized_basis(&self, enc: &Encoding) -> Result<Vec<IPoly>, PolyError> {
        let n = self.ring.nvars();
        let z = "_z";
        let ring = self.ring.extended(&[(z, 1)]);
        let mut prec = self.order.precedence().to_vec();
        prec.push(n);
        let order = MonomialOrder::blocks(n + 1, vec![prec])?;
        let gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|g| {
                let (_, top) = g.degree_range().unwrap();
                Poly::from_terms(
                    &ring,
                    g.terms().iter().map(|(m, c)| {
                        let mut e = m.clone();
                        e.push((top - self.ring.degree(m)) as u32);
                        (e, c.clone())
                    }),
                )
            })
            .collect();
        let henc = Encoding::new(&ring, &order);
        let hgb = groebner::buchberger(&henc, gens.iter().map(|g| groebner::to_ipoly(&henc, g)).collect());
        let back: Vec<IPoly> = hgb
            .iter()
            .map(|p| {
                let poly = groebner::qpoly_to_poly(&henc, &p.iter().map(|(k, c)| (k.clone(), Q::from_integer(c.clone()))).collect());
                let de = poly.specialize(n, &Q::from_integer(1.into()));
                let terms = de.terms().iter().map(|(m, c)| (m[..n].to_vec(), c.clone()));
                groebner::to_ipoly(enc, &Poly::from_terms(&self.ring, terms))
            })
            .collect();
        Ok(groebner::interreduce(enc, back))
    }

    /// `(I : f^oo)` via a Rabinowitsch variable eliminated by a block order.
    pub fn saturate(&self, f: &Poly) -> Result<Ideal, PolyError> {
        if f.is_zero() {
            return Err(PolyError::Saturation("saturation by zero".into()));
        }
        if f.homogeneous_degree() == Some(0) {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let u = "_u";
        let ring = self.ring.extended(&[(u, 1)]);
        let mut blocks = vec![vec![n]];
        let mut start = 0;
        for &len in self.order.block_sizes() {
            blocks.push(self.order.precedence()[start..start + len].to_vec());
            start += len;
        }
        let order = MonomialOrder::blocks(n + 1, blocks)?;
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<_, _>>()?;
        let fu = &f.to_ring(&ring)? * &Poly::var(&ring, n);
        gens.push(&Poly::one(&ring) - &fu);
        let qr = Ideal::with_order(&ring, gens, order).groebner()?;
        let kept = qr.basis().iter().filter(|g| g.terms().keys().all(|m| m[n] == 0)).map(|g| g.to_ring(&self.ring));
        let kept = kept.collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::with_order(&self.ring, kept, self.order.clone()))
    }

    /// `(I : f^oo)` for a homogeneous ideal and a variable `f`, by dividing a
    /// Groebner basis with `f` ordered last by the largest power of `f`.
    pub fn saturate_by_variable(&self, name: &str) -> Result<Ideal, PolyError> {
        let v = self.ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        if !self.is_homogeneous() {
            return Err(PolyError::Saturation("variable saturation needs a homogeneous ideal".into()));
        }
        let mut prec: Vec<usize> = self.order.precedence().iter().copied().filter(|&i| i != v).collect();
        prec.push(v);
        let order = MonomialOrder::blocks(self.ring.nvars(), vec![prec])?;
        let qr = self.reorder(order).groebner()?;
        let gens = qr
            .basis()
            .iter()
            .map(|g| {
                let k = g.terms().keys().map(|m| m[v]).min().unwrap_or(0);
                let mut shift = vec![0u32; self.ring.nvars()];
                shift[v] = k;
                Poly::from_terms(
                    &self.ring,
                    g.terms().iter().map(|(m, c)| {
                        let mut e = m.clone();
                        e[v] -= shift[v];
                        (e, c.clone())
                    }),
                )
            })
            .collect();
        Ok(Ideal::with_order(&self.ring, gens, self.order.clone()))
    }
}

/// `K[x] / I` through its reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    enc: Encoding,
    basis: Vec<Poly>,
    monic: Vec<QPoly>,
    std: Option<Vec<Mono>>,
    index: HashMap<Mono, usize>,
}

impl QuotientRing {
    fn from_basis(enc: Encoding, gb: Vec<IPoly>) -> QuotientRing {
        let monic: Vec<QPoly> = gb
            .iter()
            .map(|p| {
                let lc = Q::from_integer(p[0].1.clone());
                p.iter().map(|(k, c)| (k.clone(), Q::from_integer(c.clone()) / &lc)).collect()
            })
            .collect();
        let basis: Vec<Poly> = monic.iter().map(|p| groebner::qpoly_to_poly(&enc, p)).collect();
        let lms: Vec<Mono> = monic.iter().map(|p| enc.decode(&p[0].0)).collect();
        let std = standard_monomials(enc.ring.nvars(), &lms).map(|mut v| {
            v.sort_by(|a, b| enc.order.cmp(&enc.ring, a, b));
            v
        });
        let index = std.iter().flatten().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        QuotientRing { enc, basis, monic, std, index }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.enc.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.enc.order
    }

    /// The reduced Groebner basis, monic, by increasing leading monomial.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.monic.iter().map(|p| self.enc.decode(&p[0].0)).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::with_order(&self.enc.ring, self.basis.clone(), self.enc.order.clone())
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.std.is_some()
    }

    /// The whole ring collapses.
    pub fn is_trivial(&self) -> bool {
        self.std.as_ref().is_some_and(Vec::is_empty)
    }

    pub fn dim(&self) -> Option<usize> {
        self.std.as_ref().map(Vec::len)
    }

    pub fn std_monomials(&self) -> Option<&[Mono]> {
        self.std.as_deref()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let r = groebner::reduce_q(&self.enc, groebner::to_qpoly(&self.enc, f), &self.monic);
        groebner::qpoly_to_poly(&self.enc, &r)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Coordinates of `NF(f)` on the standard monomials.
    pub fn coordinates(&self, f: &Poly) -> Result<Vec<Q>, PolyError> {
        let n = self.dim().ok_or(PolyError::InfiniteQuotient)?;
        let mut v = vec![Q::zero(); n];
        for (m, c) in self.normal_form(f).terms() {
            v[self.index[m]] = c.clone();
        }
        Ok(v)
    }

    pub fn std_poly(&self, i: usize) -> Result<Poly, PolyError> {
        let std = self.std.as_ref().ok_or(PolyError::InfiniteQuotient)?;
        Ok(Poly::monomial(&self.enc.ring, std[i].clone(), Q::from_integer(1.into())))
    }

    /// Matrix of multiplication by `f` on the standard monomial basis.
    pub fn mult_matrix(&self, f: &Poly) -> Result<Matrix, PolyError> {
        let n = self.dim().ok_or(PolyError::InfiniteQuotient)?;
        let cols = (0..n).map(|j| self.coordinates(&(f * &self.std_poly(j)?))).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(n, &cols))
    }

    pub fn charpoly(&self, f: &Poly) -> Result<UPoly, PolyError> {
        Ok(self.mult_matrix(f)?.charpoly()?)
    }

    /// Number of standard monomials per weighted degree.
    pub fn hilbert_series(&self) -> Result<BTreeMap<i64, usize>, PolyError> {
        let std = self.std.as_ref().ok_or(PolyError::InfiniteQuotient)?;
        let mut out = BTreeMap::new();
        for m in std {
            *out.entry(self.enc.ring.degree(m)).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Dimension of `K[x]/(I : f^oo)` read off the quotient: the rank of a
    /// high power of multiplication by `f`.
    pub fn saturation_dim(&self, f: &Poly) -> Result<usize, PolyError> {
        let n = self.dim().ok_or(PolyError::InfiniteQuotient)?;
        let m = self.mult_matrix(f)?;
        Ok(m.pow(n as u32)?.rank())
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn s_pair_test(&self) -> bool {
        let b = &self.basis;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let li = b[i].leading_monomial(self.order()).unwrap();
                let lj = b[j].leading_monomial(self.order()).unwrap();
                let l: Mono = li.iter().zip(&lj).map(|(x, y)| *x.max(y)).collect();
                let mi: Mono = l.iter().zip(&li).map(|(x, y)| x - y).collect();
                let mj: Mono = l.iter().zip(&lj).map(|(x, y)| x - y).collect();
                let one = Q::from_integer(1.into());
                let s = &b[i].mul_monomial(&mi, &one) - &b[j].mul_monomial(&mj, &one);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// The basis is reduced: monic, and no term of any element is divisible
    /// by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            g.coeff(&lms[i]) == Q::from_integer(1.into())
                && g.terms().keys().all(|m| lms.iter().enumerate().all(|(j, l)| j == i || !divides(l, m)))
        })
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Monomials outside the leading ideal, or `None` when there are
/// infinitely many.
fn standard_monomials(n: usize, lms: &[Mono]) -> Option<Vec<Mono>> {
    if lms.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Some(Vec::new());
    }
    for v in 0..n {
        let pure = lms.iter().any(|m| m[v] > 0 && m.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !pure {
            return None;
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(v: usize, cur: &mut Mono, lms: &[Mono], out: &mut Vec<Mono>) {
        if v == cur.len() {
            out.push(cur.clone());
            return;
        }
        loop {
            if lms.iter().any(|l| divides(l, cur)) {
                break;
            }
            rec(v + 1, cur, lms, out);
            cur[v] += 1;
        }
        cur[v] = 0;
    }
    rec(0, &mut cur, lms, &mut out);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadqh_linalg::q;

    #[test]
    fn principal_ideal_is_infinite() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let qr = Ideal::parse(&r, &["x"]).unwrap().groebner().unwrap();
        assert_eq!(qr.basis().len(), 1);
        assert_eq!(qr.basis()[0].to_string(), "x");
        assert!(!qr.is_zero_dimensional());
        assert!(qr.mult_matrix(&Poly::one(&r)).is_err());
    }

    #[test]
    fn small_zero_dimensional_example() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let qr = Ideal::parse(&r, &["x^2 - y", "y^2 - 1"]).unwrap().groebner().unwrap();
        assert_eq!(qr.dim(), Some(4));
        assert!(qr.is_reduced());
        assert!(qr.s_pair_test());
        assert_eq!(qr.normal_form(&Poly::one(&r)), Poly::one(&r));
        assert_eq!(qr.normal_form(&Poly::parse(&r, "x^4").unwrap()), Poly::one(&r));
        let m = qr.mult_matrix(&Poly::one(&r)).unwrap();
        assert_eq!(m, Matrix::identity(4));
        // x has eigenvalues the fourth roots of unity
        let cp = qr.charpoly(&Poly::var(&r, 0)).unwrap();
        assert_eq!(cp, UPoly::new(vec![q(-1), q(0), q(0), q(0), q(1)]));
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let qr = Ideal::parse(&r, &["x*y - 1", "x"]).unwrap().groebner().unwrap();
        assert!(qr.is_trivial());
        assert_eq!(qr.basis()[0], Poly::one(&r));
    }

    #[test]
    fn strategies_agree() {
        let r = Ring::new(&[("h", 1), ("s", 2), ("q", 3)]);
        let i = Ideal::parse(&r, &["h^4 - s^2 + h", "s^3 - h^6 - s", "q - h^3 + 1"]).unwrap();
        let a = i.groebner_with(Strategy::Direct).unwrap();
        let b = i.groebner_with(Strategy::Homogenize).unwrap();
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn saturation_routes() {
        let r = Ring::new(&[("x", 1), ("y", 1)]);
        let i = Ideal::parse(&r, &["x^3 - x*y", "y^2 - y*x^2", "x^4 + y^4 - 2"]).unwrap();
        let x = Poly::var(&r, 0);
        let qr = i.groebner().unwrap();
        let sat = i.saturate(&x).unwrap().groebner().unwrap();
        let at_zero = i.plus(std::slice::from_ref(&x)).groebner().unwrap();
        assert_eq!(sat.dim().unwrap(), qr.saturation_dim(&x).unwrap());
        assert_eq!(sat.dim().unwrap() + at_zero.dim().unwrap(), qr.dim().unwrap());
        assert_eq!(i.saturate(&Poly::one(&r)).unwrap().gens(), i.gens());
    }

    #[test]
    fn variable_saturation_matches_rabinowitsch() {
        let r = Ring::new(&[("x", 1), ("y", 1), ("z", 1)]);
        let i = Ideal::parse(&r, &["x^2*z - y^3", "x*y^2 - z^3", "x^3*y - x*z^3"]).unwrap();
        let a = i.saturate(&Poly::var(&r, 0)).unwrap().groebner().unwrap();
        let b = i.saturate_by_variable("x").unwrap().groebner().unwrap();
        assert_eq!(a.basis(), b.basis());
    }
}
