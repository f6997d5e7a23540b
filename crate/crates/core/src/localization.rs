//! Schubert structure constants of `G/P` by torus localization.
//!
//! The restrictions `xi^w(v)` of equivariant Schubert classes to fixed points
//! are evaluated at a single numeric torus point and filled in by the
//! equivariant Chevalley recursion, longest `w` first. Non-equivariant
//! structure constants then come out of a triangular solve.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::dynkin::DynkinType;
use crate::roots::{Root, RootSystem};
use crate::weyl::{ParabolicSubset, WeylElement};
use crate::{CoreError, Q};

/// Sparse class in the Schubert basis, keyed by position in [`SchubertCalculus::elements`].
pub type SClass = BTreeMap<usize, Q>;

pub struct SchubertCalculus {
    rs: RootSystem,
    parabolic: ParabolicSubset,
    elems: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    xi: Vec<Vec<Q>>,
    w0: WeylElement,
    w0_p: WeylElement,
}

impl SchubertCalculus {
    pub fn new(dynkin: DynkinType, parabolic: ParabolicSubset) -> Result<Self, CoreError> {
        let rs = RootSystem::new(dynkin);
        parabolic.validate(rs.rank())?;
        if parabolic.marked.is_empty() {
            return Err(CoreError::Parabolic("G/G has a single point".into()));
        }
        let elems = rs.min_coset_reps(&parabolic, None);
        let index: HashMap<WeylElement, usize> = elems.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mus: Vec<Root> = elems.iter().map(|w| weight_drop(&rs, &parabolic, w)).collect();

        let covers = chevalley_covers(&rs, &parabolic, &elems, &index);
        let lam = torus_point(&rs, &mus)?;
        let eval = |r: &[i32]| -> Q { r.iter().zip(&lam).map(|(c, l)| Q::from_integer((*c).into()) * l).sum() };
        let div: Vec<Q> = mus.iter().map(|m| eval(m)).collect();

        let n = elems.len();
        let mut xi = vec![Vec::new(); n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(elems[i].length()));
        for &w in &order {
            let lw = elems[w].length();
            let mut row = vec![Q::zero(); n];
            let winv = rs.inverse(&elems[w]);
            let mut diag = Q::one();
            for b in 0..rs.n_positive() {
                if !rs.is_positive(rs.act_idx(&winv, b)) {
                    diag *= eval(rs.root(b));
                }
            }
            row[w] = diag;
            for v in 0..n {
                if v == w || elems[v].length() <= lw {
                    continue;
                }
                let mut acc = Q::zero();
                for (w2, c) in &covers[w] {
                    let x: &Q = &xi[*w2][v];
                    if !x.is_zero() {
                        acc += Q::from_integer((*c).into()) * x;
                    }
                }
                if !acc.is_zero() {
                    row[v] = acc / (&div[v] - &div[w]);
                }
            }
            xi[w] = row;
        }
        let w0 = rs.w0();
        let w0_p = rs.longest_in(&parabolic.levi_nodes(rs.rank()));
        Ok(SchubertCalculus { rs, parabolic, elems, index, xi, w0, w0_p })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.elems.iter().map(|w| w.length()).max().unwrap_or(0)
    }

    pub fn index_of(&self, w: &WeylElement) -> Result<usize, CoreError> {
        self.index.get(w).copied().ok_or(CoreError::NotMinimal)
    }

    pub fn index_of_word(&self, word: &[usize]) -> Result<usize, CoreError> {
        let w = self.rs.from_word(word)?;
        if w.length() != word.len() {
            return Err(CoreError::Parse(format!("word {word:?} is not reduced")));
        }
        self.index_of(&w)
    }

    pub fn word(&self, i: usize) -> Vec<usize> {
        self.rs.reduced_word(&self.elems[i])
    }

    pub fn length(&self, i: usize) -> usize {
        self.elems[i].length()
    }

    pub fn point(&self) -> usize {
        (0..self.len()).max_by_key(|&i| self.elems[i].length()).unwrap()
    }

    /// Poincare dual basis element: `w0 u w_{0,P}`.
    pub fn dual(&self, i: usize) -> usize {
        let x = self.rs.compose(&self.rs.compose(&self.w0, &self.elems[i]), &self.w0_p);
        self.index[&x]
    }

    /// Restriction `xi^w(v)` at the chosen torus point.
    pub fn restriction(&self, w: usize, v: usize) -> &Q {
        &self.xi[w][v]
    }

    /// `c^w_{u,v}` for all `w` of length `l(u) + l(v)`.
    pub fn structure_constants(&self, u: usize, v: usize) -> Result<Vec<(usize, Q)>, CoreError> {
        let top = self.length(u) + self.length(v);
        let lo = self.length(u).max(self.length(v));
        let mut cands: Vec<usize> = (0..self.len())
            .filter(|&w| (lo..=top).contains(&self.length(w)) && !self.xi[u][w].is_zero() && !self.xi[v][w].is_zero())
            .collect();
        cands.sort_by_key(|&w| self.length(w));
        let mut coeffs: Vec<(usize, Q)> = Vec::new();
        for &w in &cands {
            let mut val = &self.xi[u][w] * &self.xi[v][w];
            for (w2, c) in &coeffs {
                let x = &self.xi[*w2][w];
                if !x.is_zero() {
                    val -= c * x;
                }
            }
            if !val.is_zero() {
                coeffs.push((w, val / &self.xi[w][w]));
            }
        }
        let mut out = Vec::new();
        for (w, c) in coeffs {
            if self.length(w) == top {
                if !c.is_integer() || c.is_negative() {
                    return Err(CoreError::Invariant(format!("structure constant {c} is not a non-negative integer")));
                }
                out.push((w, c));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &SClass, b: &SClass) -> Result<SClass, CoreError> {
        let mut out = SClass::new();
        for (u, x) in a {
            for (v, y) in b {
                for (w, c) in self.structure_constants(*u, *v)? {
                    *out.entry(w).or_insert_with(Q::zero) += x * y * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn basis(&self, i: usize) -> SClass {
        SClass::from([(i, Q::one())])
    }

    /// Top-degree coefficient.
    pub fn degree(&self, a: &SClass) -> Q {
        a.get(&self.point()).cloned().unwrap_or_else(Q::zero)
    }
}

/// `varpi - v(varpi)` in simple-root coordinates, `varpi` the sum of the marked fundamental weights.
pub fn weight_drop(rs: &RootSystem, p: &ParabolicSubset, v: &WeylElement) -> Root {
    let n = rs.rank();
    let word = rs.reduced_word(v);
    let mut mu = vec![0i32; n];
    for &i in word.iter().rev() {
        let label = i32::from(p.is_marked(i)) - rs.simple_pairing(i, &mu);
        mu[i - 1] += label;
    }
    mu
}

fn chevalley_covers(
    rs: &RootSystem,
    p: &ParabolicSubset,
    elems: &[WeylElement],
    index: &HashMap<WeylElement, usize>,
) -> Vec<Vec<(usize, i32)>> {
    let refl: Vec<(usize, WeylElement, i32)> = (0..rs.n_positive())
        .filter_map(|b| {
            let beta = rs.root(b);
            let coef: i32 = p.marked.iter().map(|&j| {
                let e = crate::roots::unit(rs.rank(), j - 1);
                beta[j - 1] * rs.form(&e, &e) / rs.form(beta, beta)
            }).sum();
            (coef != 0).then(|| (b, rs.reflection(b), coef))
        })
        .collect();
    elems
        .iter()
        .map(|w| {
            refl.iter()
                .filter_map(|(_, s, c)| {
                    let x = rs.compose(w, s);
                    if x.length() != w.length() + 1 {
                        return None;
                    }
                    index.get(&x).map(|&i| (i, *c))
                })
                .collect()
        })
        .collect()
}

/// Torus point `lambda_i = B^i` with `B` beyond twice every coefficient of the
/// weight differences, so none of them can vanish there.
fn torus_point(rs: &RootSystem, mus: &[Root]) -> Result<Vec<Q>, CoreError> {
    let n = rs.rank();
    let mut maxc = 1i64;
    for a in mus {
        for b in mus {
            for (x, y) in a.iter().zip(b) {
                maxc = maxc.max((*x as i64 - *y as i64).abs());
            }
        }
    }
    let base = num_bigint::BigInt::from(2 * maxc + 1);
    let lam: Vec<Q> = (0..n).map(|i| Q::from_integer(num_traits::pow(base.clone(), i))).collect();
    if lam.is_empty() {
        return Err(CoreError::Invariant("rank zero".into()));
    }
    Ok(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn grassmannian_g24() {
        let sc = SchubertCalculus::new(DynkinType::a(3), ParabolicSubset::new([2])).unwrap();
        assert_eq!(sc.len(), 6);
        let s1 = sc.index_of_word(&[2]).unwrap();
        let sq = sc.mul(&sc.basis(s1), &sc.basis(s1)).unwrap();
        assert_eq!(sq.len(), 2);
        assert!(sq.values().all(|c| *c == q(1)));
        let cube = sc.mul(&sq, &sc.basis(s1)).unwrap();
        let fourth = sc.mul(&cube, &sc.basis(s1)).unwrap();
        assert_eq!(sc.degree(&fourth), q(2));
    }

    #[test]
    fn projective_plane_and_duality() {
        let sc = SchubertCalculus::new(DynkinType::a(2), ParabolicSubset::new([1])).unwrap();
        let h = sc.basis(sc.index_of_word(&[1]).unwrap());
        let h2 = sc.mul(&h, &h).unwrap();
        assert_eq!(sc.degree(&h2), q(1));
        for i in 0..sc.len() {
            assert_eq!(sc.dual(sc.dual(i)), i);
            assert_eq!(sc.length(i) + sc.length(sc.dual(i)), sc.dim());
            let pr = sc.mul(&sc.basis(i), &sc.basis(sc.dual(i))).unwrap();
            assert_eq!(sc.degree(&pr), q(1));
        }
    }

    #[test]
    fn non_simply_laced_quadric() {
        // B3/P1 is the 5-dimensional quadric: h^5 = 2 [pt]
        let sc = SchubertCalculus::new(DynkinType::b(3), ParabolicSubset::new([1])).unwrap();
        let h = sc.basis(sc.index_of_word(&[1]).unwrap());
        let mut acc = h.clone();
        for _ in 0..4 {
            acc = sc.mul(&acc, &h).unwrap();
        }
        assert_eq!(sc.degree(&acc), q(2));
    }
}
