//! Sparse multivariate polynomials over Q with weighted variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use coadqh_linalg::{fmt_q, q, Q};
use num_traits::{One, Signed, Zero};

use crate::order::MonomialOrder;
use crate::PolyError;

/// Exponent vector, indexed like the ring's variable table.
pub type Mono = Vec<u32>;

/// Variable table: names and integer weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<i64>,
}

impl Ring {
    pub fn new(vars: &[(&str, i64)]) -> Arc<Ring> {
        Arc::new(Ring {
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|(_, w)| *w).collect(),
        })
    }

    pub fn from_parts(names: Vec<String>, weights: Vec<i64>) -> Arc<Ring> {
        assert_eq!(names.len(), weights.len());
        Arc::new(Ring { names, weights })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &[u32]) -> i64 {
        m.iter().zip(&self.weights).map(|(&e, &w)| i64::from(e) * w).sum()
    }

    /// The same variables followed by `extra`.
    pub fn extended(&self, extra: &[(&str, i64)]) -> Arc<Ring> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for (n, w) in extra {
            names.push(n.to_string());
            weights.push(*w);
        }
        Arc::new(Ring { names, weights })
    }

    /// The variables other than `drop`, in order.
    pub fn without(&self, drop: &[usize]) -> Arc<Ring> {
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !drop.contains(i)).collect();
        Arc::new(Ring {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            weights: keep.iter().map(|&i| self.weights[i]).collect(),
        })
    }
}

/// A polynomial: a sparse map from exponent vectors to nonzero rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Q) -> Poly {
        Poly::monomial(ring, vec![0; ring.nvars()], c)
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, q(1))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Mono, c: Q) -> Poly {
        assert_eq!(m.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Poly {
        let mut m = vec![0; ring.nvars()];
        m[i] = 1;
        Poly::monomial(ring, m, q(1))
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Poly, PolyError> {
        let i = ring.index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(ring, i))
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Mono, Q)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn parse(ring: &Arc<Ring>, s: &str) -> Result<Poly, PolyError> {
        crate::parse::parse(ring, s)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, Q> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.ring.nvars()])
    }

    pub fn add_term(&mut self, m: Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &[u32], c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.iter().zip(m).map(|(x, y)| x + y).collect(), a * c))
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Weighted degrees of the terms, `None` for the zero polynomial.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| self.ring.degree(m));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    /// The common weighted degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.degree_range() {
            Some((lo, hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Terms of weighted degree `d`.
    pub fn graded_part(&self, d: i64) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| self.ring.degree(m) == d).map(|(m, c)| (m.clone(), c.clone()));
        Poly { ring: self.ring.clone(), terms: terms.collect() }
    }

    /// Terms of ordinary total degree `d`.
    pub fn total_degree_part(&self, d: u32) -> Poly {
        let terms = self.terms.iter().filter(|(m, _)| m.iter().sum::<u32>() == d).map(|(m, c)| (m.clone(), c.clone()));
        Poly { ring: self.ring.clone(), terms: terms.collect() }
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut e = m.clone();
                e[i] -= 1;
                out.add_term(e, &(c * q(i64::from(m[i]))));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces variable `i` by `value`, staying in the same ring.
    pub fn specialize(&self, i: usize, value: &Q) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = std::mem::replace(&mut e[i], 0);
            out.add_term(e, &(c * num_traits::pow(value.clone(), k as usize)));
        }
        out
    }

    /// Replaces variable `i` by the polynomial `value`.
    pub fn substitute(&self, i: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring);
        let mut powers: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = std::mem::replace(&mut e[i], 0);
            let pk = powers.entry(k).or_insert_with(|| value.pow(k)).clone();
            out = &out + &pk.mul_monomial(&e, c);
        }
        out
    }

    /// Moves the polynomial into `ring` by matching variable names.
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Result<Poly, PolyError> {
        let map: Vec<Option<usize>> = self.ring.names.iter().map(|n| ring.index(n)).collect();
        let mut out = Poly::zero(ring);
        for (m, c) in &self.terms {
            let mut e = vec![0; ring.nvars()];
            for (i, &k) in m.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| PolyError::UnknownVariable(self.ring.names[i].clone()))?;
                e[j] += k;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Variables occurring with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.terms.keys().any(|m| m[i] > 0)).collect()
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Mono, &Q)> {
        let mut v: Vec<(&Mono, &Q)> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(&self.ring, b.0, a.0));
        v
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Mono> {
        self.terms.keys().max_by(|a, b| order.cmp(&self.ring, a, b)).cloned()
    }

    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.fmt_mono(m);
            if mono.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_q(&a));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    fn fmt_mono(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.ring.names[i].clone() } else { format!("{}^{}", self.ring.names[i], e) })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::degrevlex(self.ring.nvars())))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        debug_assert_eq!(self.ring, o.ring);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        debug_assert_eq!(self.ring, o.ring);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        debug_assert_eq!(self.ring, o.ring);
        let mut out = Poly::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), &(x * y));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&q(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::new(&[("h", 1), ("s", 4), ("q", 11)])
    }

    #[test]
    fn arithmetic_and_degrees() {
        let r = ring();
        let h = Poly::var(&r, 0);
        let s = Poly::var(&r, 1);
        let f = &(&h.pow(4) - &s) * &(&h.pow(4) + &s);
        assert_eq!(f, &h.pow(8) - &s.pow(2));
        assert_eq!(f.homogeneous_degree(), Some(8));
        assert!(!(&h + &s).is_homogeneous());
        assert_eq!(f.derivative(0), h.pow(7).scale(&q(8)));
        assert_eq!(f.eval(&[q(2), q(3), q(0)]), q(256 - 9));
    }

    #[test]
    fn substitution_and_specialization() {
        let r = ring();
        let h = Poly::var(&r, 0);
        let s = Poly::var(&r, 1);
        let qq = Poly::var(&r, 2);
        let f = &(&h * &qq) + &s.pow(2);
        assert_eq!(f.specialize(2, &q(1)), &h + &s.pow(2));
        assert_eq!(f.substitute(1, &h.pow(4)), &(&h * &qq) + &h.pow(8));
    }

    #[test]
    fn ring_transfer() {
        let r = ring();
        let small = r.without(&[2]);
        let f = Poly::parse(&small, "h^4 - 2*s").unwrap();
        let g = f.to_ring(&r).unwrap();
        assert_eq!(g.to_ring(&small).unwrap(), f);
        assert!(Poly::var(&r, 2).to_ring(&small).is_err());
    }
}
