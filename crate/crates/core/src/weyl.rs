//! Weyl group elements, reduced words, Bruhat order and parabolic cosets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::roots::{Root, RootSystem};
use crate::CoreError;

/// A Weyl group element stored as its matrix on the root lattice: column `j`
/// holds the image of the simple root `alpha_{j+1}`.
#[derive(Clone)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i32>,
    len: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.mat == o.mat
    }
}
impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.mat.hash(h);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len={}, {:?})", self.len, self.mat)
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Image of `alpha_node`.
    pub fn column(&self, node: usize) -> Root {
        (0..self.rank).map(|i| self.mat[i * self.rank + node - 1]).collect()
    }

    fn col_negative(&self, node: usize) -> bool {
        let j = node - 1;
        (0..self.rank).any(|i| self.mat[i * self.rank + j] < 0)
    }

    /// `ell(w s_node) < ell(w)`.
    pub fn has_right_descent(&self, node: usize) -> bool {
        self.col_negative(node)
    }

    pub fn apply(&self, v: &[i32]) -> Root {
        let n = self.rank;
        (0..n).map(|i| (0..n).map(|j| self.mat[i * n + j] * v[j]).sum()).collect()
    }

    pub fn matrix(&self) -> &[i32] {
        &self.mat
    }
}

/// Nodes *not* generating the parabolic subgroup `W_P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    pub marked: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn new(nodes: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSubset { marked: nodes.into_iter().collect() }
    }

    /// The Borel subgroup: every node is marked.
    pub fn borel(rank: usize) -> Self {
        Self::new(1..=rank)
    }

    /// The whole group: no node is marked.
    pub fn full() -> Self {
        Self::new([])
    }

    pub fn is_marked(&self, node: usize) -> bool {
        self.marked.contains(&node)
    }

    /// Nodes generating `W_P`.
    pub fn levi_nodes(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|n| !self.marked.contains(n)).collect()
    }

    pub fn union(&self, o: &Self) -> Self {
        Self::new(self.marked.union(&o.marked).copied())
    }

    /// Whether `W_self` is contained in `W_other`.
    pub fn is_sub_of(&self, other: &Self) -> bool {
        other.marked.is_subset(&self.marked)
    }

    pub fn validate(&self, rank: usize) -> Result<(), CoreError> {
        match self.marked.iter().find(|&&n| n == 0 || n > rank) {
            Some(&n) => Err(CoreError::BadNode(n)),
            None => Ok(()),
        }
    }
}

/// The four longest elements attached to `R <= P`.
#[derive(Clone, Debug)]
pub struct LongestElements {
    pub w0: WeylElement,
    pub w0_p: WeylElement,
    pub w0_r: WeylElement,
    pub w0_p_upper_r: WeylElement,
}

impl RootSystem {
    fn strip_length(&self, mat: &[i32]) -> usize {
        let mut w = WeylElement { rank: self.rank(), mat: mat.to_vec(), len: 0 };
        let mut len = 0;
        while let Some(j) = (1..=self.rank()).find(|&j| w.col_negative(j)) {
            self.right_mul_in_place(&mut w, j);
            len += 1;
        }
        len
    }

    fn make(&self, mat: Vec<i32>) -> WeylElement {
        let len = self.strip_length(&mat);
        WeylElement { rank: self.rank(), mat, len }
    }

    fn right_mul_in_place(&self, w: &mut WeylElement, node: usize) {
        // (w s_j)(alpha_k) = w(alpha_k) - a[j][k] w(alpha_j)
        let n = self.rank();
        let j = node - 1;
        let colj: Vec<i32> = (0..n).map(|i| w.mat[i * n + j]).collect();
        for k in 0..n {
            let a = self.cartan[j][k];
            if a != 0 {
                for i in 0..n {
                    w.mat[i * n + k] -= a * colj[i];
                }
            }
        }
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement { rank: n, mat, len: 0 }
    }

    pub fn weyl_generator(&self, node: usize) -> Result<WeylElement, CoreError> {
        if node == 0 || node > self.rank() {
            return Err(CoreError::BadNode(node));
        }
        let mut w = self.identity();
        self.right_mul_in_place(&mut w, node);
        w.len = 1;
        Ok(w)
    }

    /// `w s_node`, with the length updated in O(rank).
    pub fn right_mul(&self, w: &WeylElement, node: usize) -> WeylElement {
        let down = w.col_negative(node);
        let mut x = w.clone();
        self.right_mul_in_place(&mut x, node);
        x.len = if down { w.len - 1 } else { w.len + 1 };
        x
    }

    /// `s_node w`.
    pub fn left_mul(&self, node: usize, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut mat = w.mat.clone();
        for k in 0..n {
            let col: Vec<i32> = (0..n).map(|i| mat[i * n + k]).collect();
            let r = self.reflect_simple(node, &col);
            for i in 0..n {
                mat[i * n + k] = r[i];
            }
        }
        self.make(mat)
    }

    /// Evaluates `s_{i1} s_{i2} ... s_{ik}`.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, CoreError> {
        let mut w = self.identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(CoreError::BadNode(i));
            }
            self.right_mul_in_place(&mut w, i);
        }
        let mat = w.mat;
        Ok(self.make(mat))
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut mat = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a.mat[i * n + k];
                if x != 0 {
                    for j in 0..n {
                        mat[i * n + j] += x * b.mat[k * n + j];
                    }
                }
            }
        }
        self.make(mat)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        // Strip right descents: w s_{j1} ... s_{jk} = e, so w^{-1} = s_{j1} ... s_{jk}.
        let mut x = w.clone();
        let mut inv = self.identity();
        while let Some(j) = (1..=self.rank()).find(|&j| x.col_negative(j)) {
            self.right_mul_in_place(&mut x, j);
            self.right_mul_in_place(&mut inv, j);
        }
        inv.len = w.len;
        inv
    }

    pub fn act(&self, w: &WeylElement, root: &[i32]) -> Root {
        w.apply(root)
    }

    pub fn act_idx(&self, w: &WeylElement, i: usize) -> usize {
        self.index_of(&w.apply(self.root(i))).expect("Weyl group permutes roots")
    }

    /// Lexicographically minimal reduced word, `w = s_{i1} ... s_{ik}`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut x = self.inverse(w);
        let mut word = Vec::with_capacity(w.len);
        while let Some(j) = (1..=self.rank()).find(|&j| x.col_negative(j)) {
            self.right_mul_in_place(&mut x, j);
            word.push(j);
        }
        word
    }

    /// Reflection in the root with index `i`.
    pub fn reflection(&self, i: usize) -> WeylElement {
        let b = self.root(i).clone();
        let n = self.rank();
        let mut mat = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let p = self.pairing(&b, &e);
            for k in 0..n {
                mat[k * n + j] = e[k] - p * b[k];
            }
        }
        self.make(mat)
    }

    /// Bruhat order by the lifting property along right descents of `v`.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            if u.len > v.len {
                return false;
            }
            if u.len == 0 {
                return true;
            }
            if u.len == v.len {
                return u == v;
            }
            let s = (1..=self.rank()).find(|&j| v.col_negative(j)).expect("v is not the identity");
            if u.col_negative(s) {
                u = self.right_mul(&u, s);
            }
            v = self.right_mul(&v, s);
        }
    }

    /// Bruhat order by exhaustive subword search of a reduced word of `v`.
    /// Exponential in `ell(v)`; meant as an oracle for small lengths.
    pub fn bruhat_leq_subword(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let word = self.reduced_word(v);
        let k = word.len();
        assert!(k <= 20, "subword oracle limited to short words");
        (0u32..(1 << k)).any(|mask| {
            if mask.count_ones() as usize != u.len {
                return false;
            }
            let sub: Vec<usize> = (0..k).filter(|b| mask & (1 << b) != 0).map(|b| word[b]).collect();
            self.from_word(&sub).map(|x| &x == u).unwrap_or(false)
        })
    }

    pub fn is_min_coset_rep(&self, w: &WeylElement, p: &ParabolicSubset) -> bool {
        p.levi_nodes(self.rank()).into_iter().all(|j| !w.col_negative(j))
    }

    pub fn in_parabolic(&self, w: &WeylElement, p: &ParabolicSubset) -> bool {
        self.reduced_word(w).iter().all(|j| !p.is_marked(*j))
    }

    /// `u = u^P u_P` with `u^P` minimal in its coset.
    pub fn coset_decompose(&self, u: &WeylElement, p: &ParabolicSubset) -> (WeylElement, WeylElement) {
        let levi = p.levi_nodes(self.rank());
        let mut x = u.clone();
        let mut stripped = Vec::new();
        while let Some(&j) = levi.iter().find(|&&j| x.col_negative(j)) {
            x = self.right_mul(&x, j);
            stripped.push(j);
        }
        stripped.reverse();
        let up = self.from_word(&stripped).expect("valid nodes");
        (x, up)
    }

    /// `W^P` elements of length at most `max_len`, in BFS order by length.
    pub fn min_coset_reps(&self, p: &ParabolicSubset, max_len: Option<usize>) -> Vec<WeylElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<WeylElement> = out.iter().cloned().collect();
        let mut layer = out.clone();
        let mut len = 0;
        while !layer.is_empty() && max_len.is_none_or(|m| len < m) {
            let mut next = Vec::new();
            for v in &layer {
                for i in 1..=self.rank() {
                    let c = self.left_mul(i, v);
                    if c.len == len + 1 && self.is_min_coset_rep(&c, p) && seen.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
            len += 1;
        }
        out
    }

    /// Longest element of the subgroup generated by `nodes`.
    pub fn longest_in(&self, nodes: &[usize]) -> WeylElement {
        let mut w = self.identity();
        while let Some(&j) = nodes.iter().find(|&&j| !w.col_negative(j)) {
            w = self.right_mul(&w, j);
        }
        w
    }

    pub fn w0(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank()).collect();
        self.longest_in(&all)
    }

    pub fn longest_elements(&self, p: &ParabolicSubset, r: &ParabolicSubset) -> Result<LongestElements, CoreError> {
        p.validate(self.rank())?;
        r.validate(self.rank())?;
        if !r.is_sub_of(p) {
            return Err(CoreError::Parabolic("R is not contained in P".into()));
        }
        let w0 = self.w0();
        let w0_p = self.longest_in(&p.levi_nodes(self.rank()));
        let w0_r = self.longest_in(&r.levi_nodes(self.rank()));
        let (w0_p_upper_r, rest) = self.coset_decompose(&w0_p, r);
        debug_assert_eq!(rest, w0_r);
        Ok(LongestElements { w0, w0_p, w0_r, w0_p_upper_r })
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("")
}

/// Parses `s3s4s2`, `w[s3,s4,s2]`, `3 4 2` or `e`.
pub fn parse_word(s: &str) -> Result<Vec<usize>, CoreError> {
    let t = s.trim();
    let t = t.strip_prefix("w[").and_then(|x| x.strip_suffix(']')).unwrap_or(t);
    if t.is_empty() || t == "e" {
        return Ok(vec![]);
    }
    t.split(|c: char| c == 's' || c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| CoreError::Parse(s.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    #[test]
    fn generators_are_involutions() {
        let rs = RootSystem::new(DynkinType::f4());
        for i in 1..=4 {
            let s = rs.weyl_generator(i).unwrap();
            assert_eq!(s.length(), 1);
            assert!(rs.compose(&s, &s).is_identity());
        }
        assert!(rs.weyl_generator(5).is_err());
    }

    #[test]
    fn f4_example_length() {
        let rs = RootSystem::new(DynkinType::f4());
        let w = rs.from_word(&[4, 2, 3, 1, 2, 3, 4]).unwrap();
        assert_eq!(w.length(), 7);
    }

    #[test]
    fn reduced_words() {
        let a2 = RootSystem::new(DynkinType::a(2));
        assert_eq!(a2.reduced_word(&a2.identity()), Vec::<usize>::new());
        assert_eq!(a2.reduced_word(&a2.from_word(&[1, 2]).unwrap()), vec![1, 2]);
        // s2 s1 s2 = s1 s2 s1, lex-min picks the latter
        assert_eq!(a2.reduced_word(&a2.from_word(&[2, 1, 2]).unwrap()), vec![1, 2, 1]);
        let e6 = RootSystem::new(DynkinType::e(6));
        let w = e6.from_word(&[6, 4, 5, 2, 4, 3, 1]).unwrap();
        let rw = e6.reduced_word(&w);
        assert_eq!(rw.len(), 7);
        assert_eq!(e6.from_word(&rw).unwrap(), w);
    }

    #[test]
    fn w0_properties() {
        for t in [DynkinType::e(6), DynkinType::b(3), DynkinType::g2(), DynkinType::d(5)] {
            let rs = RootSystem::new(t);
            let w0 = rs.w0();
            assert_eq!(w0.length(), rs.n_positive());
            assert!(rs.compose(&w0, &w0).is_identity());
            for i in 0..rs.n_positive() {
                assert!(!rs.is_positive(rs.act_idx(&w0, i)));
            }
        }
    }

    #[test]
    fn coset_factorisations() {
        let rs = RootSystem::new(DynkinType::e(6));
        let p = ParabolicSubset::new([2]);
        let w0 = rs.w0();
        let (up, u_p) = rs.coset_decompose(&w0, &p);
        let le = rs.longest_elements(&p, &ParabolicSubset::new([2, 4])).unwrap();
        assert_eq!(u_p, le.w0_p);
        assert_eq!(up.length() + u_p.length(), w0.length());
        assert_eq!(rs.compose(&up, &u_p), w0);
        let s1 = rs.weyl_generator(1).unwrap();
        assert_eq!(rs.coset_decompose(&s1, &p), (rs.identity(), s1.clone()));
        let s2 = rs.weyl_generator(2).unwrap();
        assert_eq!(rs.coset_decompose(&s2, &p), (s2, rs.identity()));
        assert_eq!(le.w0_p.length(), le.w0_p_upper_r.length() + le.w0_r.length());
        assert!(rs.longest_elements(&ParabolicSubset::new([2, 4]), &p).is_err());
        let full = ParabolicSubset::full();
        assert!(rs.longest_elements(&full, &full).unwrap().w0_p_upper_r.is_identity());
    }

    #[test]
    fn coset_rep_counts() {
        let d = |n| RootSystem::new(DynkinType::d(n));
        for n in 4..=7 {
            assert_eq!(d(n).min_coset_reps(&ParabolicSubset::new([2]), None).len(), 2 * n * (n - 1));
        }
        let e8 = RootSystem::new(DynkinType::e(8));
        assert_eq!(e8.min_coset_reps(&ParabolicSubset::new([8]), None).len(), 240);
        assert_eq!(e8.min_coset_reps(&ParabolicSubset::new([8]), Some(0)).len(), 1);
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        let rs = RootSystem::new(DynkinType::a(3));
        let reps = rs.min_coset_reps(&ParabolicSubset::borel(3), None);
        assert_eq!(reps.len(), 24);
        for u in &reps {
            for v in &reps {
                assert_eq!(rs.bruhat_leq(u, v), rs.bruhat_leq_subword(u, v));
            }
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("s3s4s2").unwrap(), vec![3, 4, 2]);
        assert_eq!(parse_word("w[s3,s4,s2]").unwrap(), vec![3, 4, 2]);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(format_word(&[3, 4, 2]), "s3s4s2");
        assert!(parse_word("sx").is_err());
    }
}
