//! Cohomology of the spaces `F_x` of lines through a point: minuscule
//! Schubert calculus by jeu de taquin, closed-form even quadrics, and
//! Kunneth products of several factors.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::dynkin::{DynkinType, Family};
use crate::roots::RootSystem;
use crate::weyl::{ParabolicSubset, WeylElement};
use crate::{q, CoreError, Q};

/// Sparse class keyed by basis index.
pub type MinusculeClass = BTreeMap<usize, Q>;

/// Order in which inner corners are vacated during rectification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerOrder {
    /// Highest-indexed maximal element of the inner shape first.
    Last,
    /// Lowest-indexed maximal element first.
    First,
}

/// The poset of a minuscule `G/P`: positive roots with coefficient one at
/// the marked node, ordered by dominance. Order ideals index Schubert classes.
pub struct MinusculePoset {
    pub dynkin: DynkinType,
    pub node: usize,
    rs: RootSystem,
    elems: Vec<usize>,
    labels: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ideals: Vec<u64>,
    ideal_index: HashMap<u64, usize>,
    weyl: Vec<WeylElement>,
    weyl_index: HashMap<WeylElement, usize>,
    duals: Vec<usize>,
    cache: Mutex<HashMap<(usize, usize), Vec<(usize, Q)>>>,
}

impl MinusculePoset {
    pub fn new(dynkin: DynkinType, node: usize) -> Result<Self, CoreError> {
        let rs = RootSystem::new(dynkin);
        if node == 0 || node > rs.rank() {
            return Err(CoreError::BadNode(node));
        }
        let minuscule = dynkin.is_simply_laced() && (0..rs.n_positive()).all(|b| rs.root(b)[node - 1] <= 1);
        if !minuscule {
            return Err(CoreError::Unsupported(format!("{dynkin}/P{node} is not minuscule")));
        }
        let elems: Vec<usize> = (0..rs.n_positive()).filter(|&b| rs.root(b)[node - 1] == 1).collect();
        if elems.len() > 64 {
            return Err(CoreError::Unsupported("poset too large for bitset ideals".into()));
        }
        let m = elems.len();
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for i in 0..m {
            for j in 0..m {
                if rs.difference(elems[j], elems[i]).is_some_and(|d| rs.is_simple(d)) {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        let p = ParabolicSubset::new([node]);
        let weyl = rs.min_coset_reps(&p, None);
        let mut ideals = Vec::with_capacity(weyl.len());
        let mut labels = vec![0usize; m];
        let elem_pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for w in &weyl {
            let mut mask = 0u64;
            for (i, &e) in elems.iter().enumerate() {
                if !rs.is_positive(rs.act_idx(w, e)) {
                    mask |= 1 << i;
                }
            }
            if mask.count_ones() as usize != w.length() {
                return Err(CoreError::Invariant("inversion set does not match length".into()));
            }
            ideals.push(mask);
        }
        // label of beta: the simple reflection that adds beta, i.e. beta = w^{-1}(alpha_i)
        for w in &weyl {
            let winv = rs.inverse(w);
            for i in 1..=rs.rank() {
                let b = rs.act_idx(&winv, rs.simple(i));
                if let Some(&pos) = elem_pos.get(&b) {
                    if labels[pos] != 0 && labels[pos] != i {
                        return Err(CoreError::Invariant("inconsistent heap labels".into()));
                    }
                    labels[pos] = i;
                }
            }
        }
        let ideal_index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let weyl_index: HashMap<WeylElement, usize> = weyl.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let w0 = rs.w0();
        let w0p = rs.longest_in(&p.levi_nodes(rs.rank()));
        let duals = weyl.iter().map(|w| weyl_index[&rs.compose(&rs.compose(&w0, w), &w0p)]).collect();
        Ok(MinusculePoset {
            dynkin,
            node,
            rs,
            elems,
            labels,
            up,
            down,
            ideals,
            ideal_index,
            weyl,
            weyl_index,
            duals,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn n_elements(&self) -> usize {
        self.elems.len()
    }

    pub fn n_ideals(&self) -> usize {
        self.ideals.len()
    }

    pub fn element_root(&self, i: usize) -> usize {
        self.elems[i]
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.elems.len()).flat_map(|i| self.up[i].iter().map(move |&j| (i, j))).collect()
    }

    pub fn ideal(&self, idx: usize) -> u64 {
        self.ideals[idx]
    }

    pub fn ideal_elements(&self, idx: usize) -> Vec<usize> {
        (0..self.elems.len()).filter(|&i| self.ideals[idx] & (1 << i) != 0).collect()
    }

    pub fn index_of_ideal(&self, mask: u64) -> Option<usize> {
        self.ideal_index.get(&mask).copied()
    }

    pub fn size(&self, idx: usize) -> usize {
        self.ideals[idx].count_ones() as usize
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn top(&self) -> usize {
        self.ideal_index[&full_mask(self.elems.len())]
    }

    pub fn unit(&self) -> usize {
        self.ideal_index[&0]
    }

    pub fn weyl(&self, idx: usize) -> &WeylElement {
        &self.weyl[idx]
    }

    pub fn index_of_weyl(&self, w: &WeylElement) -> Result<usize, CoreError> {
        self.weyl_index.get(w).copied().ok_or(CoreError::NotMinimal)
    }

    pub fn index_of_word(&self, word: &[usize]) -> Result<usize, CoreError> {
        let w = self.rs.from_word(word)?;
        if w.length() != word.len() {
            return Err(CoreError::Parse(format!("word {word:?} is not reduced")));
        }
        self.index_of_weyl(&w)
    }

    /// A reduced word read off a linear extension of the ideal.
    pub fn word_of(&self, idx: usize) -> Vec<usize> {
        let mut w: Vec<usize> = self.ideal_elements(idx).into_iter().map(|e| self.labels[e]).collect();
        w.reverse();
        w
    }

    pub fn dual(&self, idx: usize) -> usize {
        self.duals[idx]
    }

    pub fn deg(&self, c: &MinusculeClass) -> Q {
        c.get(&self.top()).cloned().unwrap_or_else(Q::zero)
    }

    fn is_addable(&self, mask: u64, x: usize) -> bool {
        mask & (1 << x) == 0 && self.down[x].iter().all(|&d| mask & (1 << d) != 0)
    }

    /// Rectifies a standard filling (`filling[e]` = label, 0 = empty) of a
    /// skew shape with inner ideal `inner`.
    pub fn rectify(&self, inner: u64, filling: &[u8], order: CornerOrder) -> Vec<u8> {
        let mut f = filling.to_vec();
        let mut inner = inner;
        while inner != 0 {
            let corners = (0..self.elems.len())
                .filter(|&c| inner & (1 << c) != 0 && self.up[c].iter().all(|&u| inner & (1 << u) == 0));
            let c = match order {
                CornerOrder::Last => corners.max(),
                CornerOrder::First => corners.min(),
            }
            .expect("nonempty ideal has a maximal element");
            inner &= !(1 << c);
            let mut hole = c;
            loop {
                let next = self.up[hole].iter().copied().filter(|&y| f[y] != 0).min_by_key(|&y| f[y]);
                match next {
                    Some(y) => {
                        f[hole] = f[y];
                        f[y] = 0;
                        hole = y;
                    }
                    None => break,
                }
            }
        }
        f
    }

    /// The fixed standard filling of a straight shape: elements in index order.
    pub fn superstandard(&self, idx: usize) -> Vec<u8> {
        let mut f = vec![0u8; self.elems.len()];
        for (k, e) in self.ideal_elements(idx).into_iter().enumerate() {
            f[e] = (k + 1) as u8;
        }
        f
    }

    /// All standard fillings of skew shapes `nu / inner` with `k` boxes, as (nu, filling).
    pub fn standard_fillings(&self, inner: u64, k: usize) -> Vec<(u64, Vec<u8>)> {
        let mut out = Vec::new();
        let mut f = vec![0u8; self.elems.len()];
        self.fill_rec(inner, 0, k, &mut f, &mut out);
        out
    }

    fn fill_rec(&self, mask: u64, t: usize, k: usize, f: &mut Vec<u8>, out: &mut Vec<(u64, Vec<u8>)>) {
        if t == k {
            out.push((mask, f.clone()));
            return;
        }
        for x in 0..self.elems.len() {
            if self.is_addable(mask, x) {
                f[x] = (t + 1) as u8;
                self.fill_rec(mask | (1 << x), t + 1, k, f, out);
                f[x] = 0;
            }
        }
    }

    /// `c^nu_{lam,mu}` for every `nu`, by counting fillings of `nu/lam` that
    /// rectify to the superstandard filling of `mu`.
    pub fn lr_with(&self, lam: usize, mu: usize, order: CornerOrder) -> Vec<(usize, Q)> {
        let target = self.superstandard(mu);
        let inner = self.ideals[lam];
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        self.count_rec(inner, inner, 0, self.size(mu), &mut vec![0u8; self.elems.len()], &target, order, &mut counts);
        counts.into_iter().map(|(nu, c)| (nu, q(c))).collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn count_rec(
        &self,
        inner: u64,
        mask: u64,
        t: usize,
        k: usize,
        f: &mut Vec<u8>,
        target: &[u8],
        order: CornerOrder,
        counts: &mut BTreeMap<usize, i64>,
    ) {
        if t == k {
            if self.rectify(inner, f, order) == target {
                *counts.entry(self.ideal_index[&mask]).or_insert(0) += 1;
            }
            return;
        }
        for x in 0..self.elems.len() {
            if self.is_addable(mask, x) {
                f[x] = (t + 1) as u8;
                self.count_rec(inner, mask | (1 << x), t + 1, k, f, target, order, counts);
                f[x] = 0;
            }
        }
    }

    /// Littlewood-Richardson coefficients `sigma_lam * sigma_mu`, cached.
    pub fn lr(&self, lam: usize, mu: usize) -> Vec<(usize, Q)> {
        let key = if self.size(lam) >= self.size(mu) { (lam, mu) } else { (mu, lam) };
        if key.0 + key.1 == usize::MAX {
            unreachable!();
        }
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = if self.size(key.0) + self.size(key.1) > self.dim() {
            Vec::new()
        } else {
            self.lr_with(key.0, key.1, CornerOrder::Last)
        };
        self.cache.lock().expect("cache lock").insert(key, v.clone());
        v
    }

    pub fn basis(&self, i: usize) -> MinusculeClass {
        MinusculeClass::from([(i, Q::one())])
    }

    pub fn cup(&self, a: &MinusculeClass, b: &MinusculeClass) -> MinusculeClass {
        let mut out = MinusculeClass::new();
        for (u, x) in a {
            for (v, y) in b {
                for (w, c) in self.lr(*u, *v) {
                    *out.entry(w).or_insert_with(Q::zero) += x * y * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Basis of `H^*(Q^{2m})`: `0..=2m` are `xi_i`, and `2m + 1` is `xi'_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadric {
    pub m: usize,
}

impl Quadric {
    pub fn size(&self) -> usize {
        2 * self.m + 2
    }

    pub fn prime(&self) -> usize {
        2 * self.m + 1
    }

    pub fn degree(&self, i: usize) -> usize {
        if i == self.prime() {
            self.m
        } else {
            i
        }
    }

    pub fn top(&self) -> usize {
        2 * self.m
    }

    pub fn dual(&self, i: usize) -> usize {
        let m = self.m;
        if i == m || i == self.prime() {
            // xi_m^2 = pt iff m even
            let same_is_dual = m.is_multiple_of(2);
            match (i == m, same_is_dual) {
                (true, true) | (false, false) => m,
                _ => self.prime(),
            }
        } else {
            2 * m - i
        }
    }

    /// Closed-form product of two basis classes.
    pub fn cup_basis(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        let m = self.m;
        let mid = |x: usize| x == m || x == self.prime();
        let (di, dj) = (self.degree(i), self.degree(j));
        let d = di + dj;
        if d > 2 * m {
            return vec![];
        }
        if di == 0 {
            return vec![(j, Q::one())];
        }
        if dj == 0 {
            return vec![(i, Q::one())];
        }
        if mid(i) && mid(j) {
            let same = i == j;
            let hit = if m.is_multiple_of(2) { same } else { !same };
            return if hit { vec![(2 * m, Q::one())] } else { vec![] };
        }
        if mid(i) || mid(j) {
            // h^k xi_m = xi_{m+k}
            return vec![(d, Q::one())];
        }
        // both are h-powers up to the factor 1/2 above the middle
        let half = |x: usize| if x > m { Q::new(1.into(), 2.into()) } else { Q::one() };
        let coef = half(i) * half(j);
        if d < m {
            vec![(d, coef)]
        } else if d == m {
            vec![(m, coef.clone()), (self.prime(), coef)]
        } else {
            vec![(d, coef * q(2))]
        }
    }
}

/// One factor of `F_x`.
pub enum Factor {
    Minuscule(MinusculePoset),
    Quadric(Quadric),
}

impl Factor {
    pub fn size(&self) -> usize {
        match self {
            Factor::Minuscule(p) => p.n_ideals(),
            Factor::Quadric(qd) => qd.size(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Factor::Minuscule(p) => p.dim(),
            Factor::Quadric(qd) => 2 * qd.m,
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        match self {
            Factor::Minuscule(p) => p.size(i),
            Factor::Quadric(qd) => qd.degree(i),
        }
    }

    pub fn top(&self) -> usize {
        match self {
            Factor::Minuscule(p) => p.top(),
            Factor::Quadric(qd) => qd.top(),
        }
    }

    pub fn unit(&self) -> usize {
        match self {
            Factor::Minuscule(p) => p.unit(),
            Factor::Quadric(_) => 0,
        }
    }

    pub fn dual(&self, i: usize) -> usize {
        match self {
            Factor::Minuscule(p) => p.dual(i),
            Factor::Quadric(qd) => qd.dual(i),
        }
    }

    pub fn cup_basis(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        match self {
            Factor::Minuscule(p) => p.lr(i, j),
            Factor::Quadric(qd) => qd.cup_basis(i, j),
        }
    }

    /// Basis classes of degree one.
    pub fn divisors(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.degree(i) == 1).collect()
    }
}

/// How a factor's nodes sit inside the ambient diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub dynkin: DynkinType,
    pub marked: usize,
    /// `relabel[i - 1]` is the ambient node of factor node `i`.
    pub relabel: Vec<usize>,
    /// Use the closed-form quadric instead of a poset (even quadrics of type D).
    pub closed_form_quadric: bool,
}

impl FactorSpec {
    fn to_ambient(&self, node: usize) -> usize {
        self.relabel[node - 1]
    }

    fn from_ambient(&self, node: usize) -> Option<usize> {
        self.relabel.iter().position(|&a| a == node).map(|p| p + 1)
    }
}

/// Which identification of the Levi factors to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FxRoute {
    /// Closed forms (P^1 and quadrics) where available, explicit tables otherwise.
    Closed,
    /// Posets for every factor, with factors identified from the diagram.
    Posets,
}

/// `F_x` for the homogeneous space `dynkin/P_node`: the Levi of `P` with
/// the neighbours of `node` marked.
pub fn fx_of(dynkin: DynkinType, node: usize, route: FxRoute) -> Result<Vec<FactorSpec>, CoreError> {
    let sl = |t: DynkinType, marked: usize, relabel: Vec<usize>| FactorSpec { dynkin: t, marked, relabel, closed_form_quadric: false };
    match (dynkin.family, dynkin.rank, node) {
        (Family::E, 6, 2) => Ok(vec![sl(DynkinType::a(5), 3, vec![1, 3, 4, 5, 6])]),
        (Family::E, 7, 1) => Ok(vec![sl(DynkinType::d(6), 6, vec![7, 6, 5, 4, 2, 3])]),
        (Family::E, 8, 8) => Ok(vec![sl(DynkinType::e(7), 7, (1..=7).collect())]),
        (Family::E, 6, 1) => Ok(vec![sl(DynkinType::d(5), 4, vec![6, 5, 4, 3, 2])]),
        (Family::D, n, 2) if route == FxRoute::Closed => Ok(vec![
            sl(DynkinType::a(1), 1, vec![1]),
            FactorSpec {
                dynkin: DynkinType::d(n.max(4)),
                marked: 3,
                relabel: (3..=n).collect(),
                closed_form_quadric: true,
            },
        ]),
        (Family::A | Family::D, _, _) => identify_levi(dynkin, node),
        _ => Err(CoreError::Unsupported(format!("F_x for {dynkin}/P{node}"))),
    }
}

/// Splits the Levi diagram of `P_node` into components and numbers each in
/// Bourbaki order (types A and D only).
fn identify_levi(dynkin: DynkinType, node: usize) -> Result<Vec<FactorSpec>, CoreError> {
    let marked_q: Vec<usize> = dynkin.neighbors(node);
    let nodes: Vec<usize> = (1..=dynkin.rank).filter(|&i| i != node).collect();
    let adj = |a: usize, b: usize| dynkin.cartan()[a - 1][b - 1] != 0 && a != b;
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &s in &nodes {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &t in &nodes {
                if adj(comp[i], t) && seen.insert(t) {
                    comp.push(t);
                }
            }
            i += 1;
        }
        comp.sort();
        comps.push(comp);
    }
    let mut out = Vec::new();
    for comp in comps {
        let marked: Vec<usize> = comp.iter().copied().filter(|c| marked_q.contains(c)).collect();
        if marked.len() != 1 {
            return Err(CoreError::Unsupported("Levi component with several marked nodes".into()));
        }
        let mk = marked[0];
        let deg = |x: usize| comp.iter().filter(|&&y| adj(x, y)).count();
        let branch: Vec<usize> = comp.iter().copied().filter(|&x| deg(x) == 3).collect();
        let (t, relabel) = if branch.is_empty() {
            // chain: start from the end with the smaller label
            let ends: Vec<usize> = comp.iter().copied().filter(|&x| deg(x) <= 1).collect();
            let mut order = vec![ends[0]];
            while order.len() < comp.len() {
                let last = *order.last().unwrap();
                let nxt = comp.iter().copied().find(|&y| adj(last, y) && !order.contains(&y)).unwrap();
                order.push(nxt);
            }
            (DynkinType::a(comp.len()), order)
        } else {
            let b = branch[0];
            let mut legs: Vec<Vec<usize>> = comp
                .iter()
                .copied()
                .filter(|&y| adj(b, y))
                .map(|start| {
                    let mut leg = vec![start];
                    loop {
                        let last = *leg.last().unwrap();
                        let prev = if leg.len() >= 2 { leg[leg.len() - 2] } else { b };
                        match comp.iter().copied().find(|&y| adj(last, y) && y != prev && y != b) {
                            Some(y) => leg.push(y),
                            None => break,
                        }
                    }
                    leg
                })
                .collect();
            // long leg first; for D4 prefer the marked leg as node 1
            legs.sort_by_key(|l| (std::cmp::Reverse(l.len()), !l.contains(&mk), l[0]));
            let long: Vec<usize> = legs[0].iter().rev().copied().collect();
            let mut order = long;
            order.push(b);
            order.push(legs[1][0]);
            order.push(legs[2][0]);
            if legs[1].len() != 1 || legs[2].len() != 1 {
                return Err(CoreError::Unsupported("exceptional Levi component".into()));
            }
            (DynkinType::d(comp.len()), order)
        };
        let marked = relabel.iter().position(|&a| a == mk).unwrap() + 1;
        out.push(FactorSpec { dynkin: t, marked, relabel, closed_form_quadric: false });
    }
    Ok(out)
}

/// `F_x` as a product of factors, with the dictionary from ambient Weyl words.
pub struct FxSpace {
    pub specs: Vec<FactorSpec>,
    pub factors: Vec<Factor>,
    ambient: RootSystem,
}

/// Class on `F_x`: coefficients on tensor products of factor basis classes.
pub type FxClass = BTreeMap<Vec<usize>, Q>;

impl FxSpace {
    pub fn new(ambient: DynkinType, specs: Vec<FactorSpec>) -> Result<Self, CoreError> {
        let factors = specs
            .iter()
            .map(|s| {
                if s.closed_form_quadric {
                    Ok(Factor::Quadric(Quadric { m: s.relabel.len() - 1 }))
                } else {
                    MinusculePoset::new(s.dynkin, s.marked).map(Factor::Minuscule)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FxSpace { specs, factors, ambient: RootSystem::new(ambient) })
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }

    pub fn unit(&self) -> Vec<usize> {
        self.factors.iter().map(Factor::unit).collect()
    }

    pub fn top(&self) -> Vec<usize> {
        self.factors.iter().map(Factor::top).collect()
    }

    pub fn degree_of(&self, key: &[usize]) -> usize {
        key.iter().zip(&self.factors).map(|(&i, f)| f.degree(i)).sum()
    }

    pub fn basis(&self, key: Vec<usize>) -> FxClass {
        FxClass::from([(key, Q::one())])
    }

    /// Sum of the degree-one classes of every factor (the hyperplane class of
    /// the embedding in the projectivized tangent directions).
    pub fn hyperplane(&self) -> FxClass {
        let mut out = FxClass::new();
        for (k, f) in self.factors.iter().enumerate() {
            for d in f.divisors() {
                let mut key = self.unit();
                key[k] = d;
                out.insert(key, Q::one());
            }
        }
        out
    }

    pub fn cup(&self, a: &FxClass, b: &FxClass) -> FxClass {
        let mut out = FxClass::new();
        for (ka, x) in a {
            for (kb, y) in b {
                let mut partial: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), x * y)];
                for (f, (&i, &j)) in self.factors.iter().zip(ka.iter().zip(kb)) {
                    let prod = f.cup_basis(i, j);
                    let mut next = Vec::new();
                    for (key, c) in &partial {
                        for (r, d) in &prod {
                            let mut k2 = key.clone();
                            k2.push(*r);
                            next.push((k2, c * d));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (key, c) in partial {
                    *out.entry(key).or_insert_with(Q::zero) += c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn deg(&self, a: &FxClass) -> Q {
        a.get(&self.top()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn dual_key(&self, key: &[usize]) -> Vec<usize> {
        key.iter().zip(&self.factors).map(|(&i, f)| f.dual(i)).collect()
    }

    /// Basis key of an ambient element of `W_P^R`, given by a reduced word in ambient labels.
    pub fn key_of_ambient_word(&self, word: &[usize]) -> Result<Vec<usize>, CoreError> {
        let mut key = Vec::with_capacity(self.factors.len());
        let mut used = 0;
        for (spec, f) in self.specs.iter().zip(&self.factors) {
            let sub: Vec<usize> = word.iter().filter_map(|&a| spec.from_ambient(a)).collect();
            used += sub.len();
            let idx = match f {
                Factor::Minuscule(p) => p.index_of_word(&sub)?,
                Factor::Quadric(qd) => {
                    let amb: Vec<usize> = sub.iter().map(|&c| spec.to_ambient(c)).collect();
                    quadric_index(qd, &spec.relabel, &amb)?
                }
            };
            key.push(idx);
        }
        if used != word.len() {
            return Err(CoreError::Invariant(format!("word {word:?} leaves the Levi of F_x")));
        }
        Ok(key)
    }

    /// Ambient reduced word of a basis key (factor words concatenated).
    pub fn ambient_word_of_key(&self, key: &[usize]) -> Vec<usize> {
        let mut word = Vec::new();
        for ((spec, f), &i) in self.specs.iter().zip(&self.factors).zip(key) {
            match f {
                Factor::Minuscule(p) => word.extend(p.word_of(i).into_iter().map(|c| spec.to_ambient(c))),
                Factor::Quadric(qd) => word.extend(quadric_word(qd, &spec.relabel, i)),
            }
        }
        word
    }

    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn format_key(&self, key: &[usize]) -> String {
        crate::weyl::format_word(&self.ambient_word_of_key(key))
    }
}

/// Ambient word of a quadric basis class. The quadric sits on ambient nodes
/// `c1 - c2 - ... - c_{k-2}` with `c_{k-1}, c_k` both attached to `c_{k-2}`.
fn quadric_word(qd: &Quadric, nodes: &[usize], i: usize) -> Vec<usize> {
    let k = nodes.len();
    let m = qd.m;
    let deg = qd.degree(i);
    // ascending chain c1, c2, ..., c_{k-2}, then c_{k-1} or c_k, then back down
    let up: Vec<usize> = nodes[..k - 2].to_vec();
    let mut seq: Vec<usize> = Vec::new();
    if deg <= m {
        seq.extend(up.iter().take(deg.min(k - 2)));
        if deg == m {
            seq.truncate(m - 1);
            seq.push(if i == qd.prime() { nodes[k - 1] } else { nodes[k - 2] });
        }
    } else {
        seq.extend(up.iter());
        seq.push(nodes[k - 2]);
        seq.push(nodes[k - 1]);
        let mut down: Vec<usize> = up.iter().rev().copied().collect();
        down.truncate(deg - m - 1);
        seq.extend(down);
    }
    seq.reverse();
    seq
}

fn quadric_index(qd: &Quadric, nodes: &[usize], amb: &[usize]) -> Result<usize, CoreError> {
    let k = nodes.len();
    let d = amb.len();
    if d > 2 * qd.m {
        return Err(CoreError::Invariant("word longer than the quadric".into()));
    }
    if d == qd.m && qd.m >= 1 {
        let a = amb.contains(&nodes[k - 2]);
        let b = amb.contains(&nodes[k - 1]);
        return match (a, b) {
            (true, false) => Ok(qd.m),
            (false, true) => Ok(qd.prime()),
            _ => Err(CoreError::Invariant("middle quadric class not recognised".into())),
        };
    }
    Ok(d)
}
