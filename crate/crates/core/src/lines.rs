//! Lines on coadjoint varieties: the parabolics `Q` and `R`, the space `F_x`
//! of lines through a point, the map `sigma -> i^* q_* p^* sigma`, and
//! degree-one Gromov-Witten invariants with a point insertion.

use num_traits::Zero;

use crate::coadjoint::{CohClass, CoadjointVariety};
use crate::dynkin::DynkinType;
use crate::folding::FoldingMap;
use crate::minuscule::{fx_of, FxClass, FxRoute, FxSpace};
use crate::roots::RootSystem;
use crate::weyl::{ParabolicSubset, WeylElement};
use crate::{CoreError, Q};

/// Line geometry of a simply-laced `G/P` with `P` maximal.
pub struct Lines {
    pub rs: RootSystem,
    pub node: usize,
    pub p_nodes: ParabolicSubset,
    pub q_nodes: ParabolicSubset,
    pub r_nodes: ParabolicSubset,
    pub fx: FxSpace,
    pub w0p_upper_q: WeylElement,
    s_p: WeylElement,
}

impl Lines {
    pub fn new(dynkin: DynkinType, node: usize, route: FxRoute) -> Result<Self, CoreError> {
        if !dynkin.is_simply_laced() {
            return Err(CoreError::Unsupported(format!("lines on {dynkin}/P{node} need a folding")));
        }
        let rs = RootSystem::new(dynkin);
        let p_nodes = ParabolicSubset::new([node]);
        let q_nodes = ParabolicSubset::new(dynkin.neighbors(node));
        let r_nodes = p_nodes.union(&q_nodes);
        let fx = FxSpace::new(dynkin, fx_of(dynkin, node, route)?)?;
        let w0p = rs.longest_in(&p_nodes.levi_nodes(rs.rank()));
        let w0p_upper_q = rs.coset_decompose(&w0p, &r_nodes).0;
        if w0p_upper_q.length() != fx.dim() {
            return Err(CoreError::Invariant("dim F_x differs from l(w_{0,P}^Q)".into()));
        }
        let s_p = rs.weyl_generator(node)?;
        Ok(Lines { rs, node, p_nodes, q_nodes, r_nodes, fx, w0p_upper_q, s_p })
    }

    /// `w_{0,Q}^R`, which equals `s_P`.
    pub fn w0q_upper_r(&self) -> WeylElement {
        let w0q = self.rs.longest_in(&self.q_nodes.levi_nodes(self.rs.rank()));
        self.rs.coset_decompose(&w0q, &self.r_nodes).0
    }

    pub fn s_p(&self) -> &WeylElement {
        &self.s_p
    }

    /// The `F_x` key of `sigma^{w s_P}` when `w != e` and `w s_P <= w_{0,P}^Q`.
    pub fn bar_key(&self, w: &WeylElement) -> Result<Option<Vec<usize>>, CoreError> {
        if !self.rs.is_min_coset_rep(w, &self.p_nodes) {
            return Err(CoreError::NotMinimal);
        }
        if w.is_identity() {
            return Ok(None);
        }
        let u = self.rs.compose(w, &self.s_p);
        if !self.rs.bruhat_leq(&u, &self.w0p_upper_q) {
            return Ok(None);
        }
        let key = self.fx.key_of_ambient_word(&self.rs.reduced_word(&u))?;
        if self.fx.degree_of(&key) + 1 != w.length() {
            return Err(CoreError::Invariant("bar does not drop the degree by one".into()));
        }
        Ok(Some(key))
    }

    pub fn bar_weyl(&self, w: &WeylElement) -> Result<FxClass, CoreError> {
        Ok(match self.bar_key(w)? {
            Some(k) => self.fx.basis(k),
            None => FxClass::new(),
        })
    }

    /// `W^P` element `u s_P` lifting an `F_x` basis key.
    pub fn lift_key(&self, key: &[usize]) -> Result<WeylElement, CoreError> {
        let mut word = self.fx.ambient_word_of_key(key);
        word.push(self.node);
        let w = self.rs.from_word(&word)?;
        if w.length() != word.len() || !self.rs.is_min_coset_rep(&w, &self.p_nodes) {
            return Err(CoreError::Lift(format!("{word:?} is not a reduced element of W^P")));
        }
        Ok(w)
    }

    /// Product of classes followed by the degree on `F_x`.
    pub fn product(&self, classes: &[FxClass]) -> FxClass {
        let mut acc = self.fx.basis(self.fx.unit());
        for c in classes {
            acc = self.fx.cup(&acc, c);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    /// The Poincare dual of a product, term by term.
    pub fn dualize(&self, c: &FxClass) -> FxClass {
        c.iter().map(|(k, v)| (self.fx.dual_key(k), v.clone())).collect()
    }
}

fn check_balance(expected: i64, got: i64) -> Result<(), CoreError> {
    if expected != got {
        return Err(CoreError::Unbalanced { expected, got });
    }
    Ok(())
}

fn degree_of_class(x: &CoadjointVariety, c: &CohClass) -> Result<i64, CoreError> {
    if !c.is_classical() {
        return Err(CoreError::Unsupported("GW insertions must be classical".into()));
    }
    x.class_degree(c).ok_or_else(|| CoreError::Invariant("insertion is not homogeneous".into()))
}

/// Lines on a simply-laced coadjoint variety.
pub struct LineGeometry {
    pub x: CoadjointVariety,
    pub lines: Lines,
}

impl LineGeometry {
    pub fn new(x: CoadjointVariety) -> Result<Self, CoreError> {
        Self::with_route(x, FxRoute::Closed)
    }

    pub fn with_route(x: CoadjointVariety, route: FxRoute) -> Result<Self, CoreError> {
        let lines = Lines::new(x.dynkin, x.node, route)?;
        Ok(LineGeometry { x, lines })
    }

    pub fn bar_root(&self, root: usize) -> Result<FxClass, CoreError> {
        self.lines.bar_weyl(self.x.weyl_of_root(root)?)
    }

    pub fn bar(&self, c: &CohClass) -> Result<FxClass, CoreError> {
        let mut out = FxClass::new();
        for (k, r, v) in c.iter() {
            if k != 0 {
                return Err(CoreError::Unsupported("bar of a quantum class".into()));
            }
            for (key, x) in self.bar_root(r)? {
                *out.entry(key).or_insert_with(Q::zero) += v * x;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Balance for `<[pt], c_1, ..., c_n>_1`: `sum deg c_i = n - 2 + index`.
    pub fn expected_degree(&self, n: usize) -> i64 {
        n as i64 - 2 + self.x.index_r
    }

    /// `<[pt], c_1, ..., c_n>_1` as `deg_{F_x}(prod bar(c_i))`.
    pub fn gw1(&self, classes: &[CohClass]) -> Result<Q, CoreError> {
        let got: i64 = classes.iter().map(|c| degree_of_class(&self.x, c)).sum::<Result<i64, _>>()?;
        check_balance(self.expected_degree(classes.len()), got)?;
        let bars = classes.iter().map(|c| self.bar(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.lines.fx.deg(&self.lines.product(&bars)))
    }

    fn probe_degree(&self, fixed: &[CohClass]) -> Result<i64, CoreError> {
        let got: i64 = fixed.iter().map(|c| degree_of_class(&self.x, c)).sum::<Result<i64, _>>()?;
        let d = self.expected_degree(fixed.len() + 1) - got;
        if d < 0 || d > self.x.dim {
            return Err(CoreError::Unbalanced { expected: self.expected_degree(fixed.len() + 1), got });
        }
        Ok(d)
    }

    /// `<[pt], fixed..., gamma>_1 = sum weight * coeff_{sigma_root}(gamma)`, by
    /// dualizing `prod bar(fixed)` in `F_x` and lifting each term through `s_P`.
    pub fn gw1_coeff_extract(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        let d = self.probe_degree(fixed)?;
        let bars = fixed.iter().map(|c| self.bar(c)).collect::<Result<Vec<_>, _>>()?;
        let prod = self.lines.product(&bars);
        let mut out = Vec::new();
        for (key, v) in self.lines.dualize(&prod) {
            let w = self.lines.lift_key(&key)?;
            let root = self.x.root_of_weyl(&w)?;
            if self.x.degree(root) != d {
                return Err(CoreError::Invariant("lifted class has the wrong degree".into()));
            }
            out.push((root, v));
        }
        out.sort_by_key(|(r, _)| self.x.position(*r));
        Ok(out)
    }

    /// The same functional, evaluated on every basis class of the probe degree.
    pub fn gw1_functional_direct(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        let d = self.probe_degree(fixed)?;
        let mut out = Vec::new();
        for r in self.x.basis_of_degree(d) {
            let mut all = fixed.to_vec();
            all.push(CohClass::basis(r));
            let v = self.gw1(&all)?;
            if !v.is_zero() {
                out.push((r, v));
            }
        }
        out.sort_by_key(|(r, _)| self.x.position(*r));
        Ok(out)
    }
}

/// Lines on `F4/P4` through the hyperplane section `F4/P4 = E6/P1 cap H`.
pub struct FoldedLineGeometry {
    pub x: CoadjointVariety,
    pub fold: FoldingMap,
    pub y: Lines,
}

impl FoldedLineGeometry {
    pub fn new(x: CoadjointVariety) -> Result<Self, CoreError> {
        if x.dynkin != DynkinType::f4() {
            return Err(CoreError::Unsupported(format!("folded GW evaluation for {}", x.dynkin)));
        }
        let fold = FoldingMap::for_target(x.dynkin)?;
        let y = Lines::new(fold.source, fold.source_node, FxRoute::Closed)?;
        Ok(FoldedLineGeometry { x, fold, y })
    }

    /// `w_*` for the Schubert class `sigma_root`, when `deg <= dim X / 2`.
    pub fn lift(&self, root: usize) -> Result<WeylElement, CoreError> {
        let w = self.x.weyl_of_root(root)?;
        if 2 * w.length() as i64 > self.x.dim {
            return Err(CoreError::Lift(format!("{} has degree above dim X / 2", self.x.rs.label(root))));
        }
        self.fold.w_star(w)
    }

    fn lifted_bar(&self, c: &CohClass) -> Result<FxClass, CoreError> {
        let mut out = FxClass::new();
        for (k, r, v) in c.iter() {
            if k != 0 {
                return Err(CoreError::Unsupported("bar of a quantum class".into()));
            }
            let wh = self.lift(r)?;
            if let Some(key) = self.y.bar_key(&wh)? {
                *out.entry(key).or_insert_with(Q::zero) += v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn expected_degree(&self, n: usize) -> i64 {
        n as i64 - 2 + self.x.index_r
    }

    /// `<[pt], c_1, ..., c_n>_1 = deg_{F_x(Y)}(h cup prod sigma^{w^_i s_P^})`.
    pub fn gw1(&self, classes: &[CohClass]) -> Result<Q, CoreError> {
        let got: i64 = classes.iter().map(|c| degree_of_class(&self.x, c)).sum::<Result<i64, _>>()?;
        check_balance(self.expected_degree(classes.len()), got)?;
        let mut bars = vec![self.y.fx.hyperplane()];
        for c in classes {
            bars.push(self.lifted_bar(c)?);
        }
        Ok(self.y.fx.deg(&self.y.product(&bars)))
    }

    /// Dualize `h cup prod bar(fixed)` on `F_x(Y)`, lift to `W^{P^}` and pull back by `w^ -> w^*`.
    pub fn gw1_coeff_extract(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        let got: i64 = fixed.iter().map(|c| degree_of_class(&self.x, c)).sum::<Result<i64, _>>()?;
        let d = self.expected_degree(fixed.len() + 1) - got;
        if d < 0 || 2 * d > self.x.dim {
            return Err(CoreError::Lift(format!("probe degree {d} is outside the liftable range")));
        }
        let mut bars = vec![self.y.fx.hyperplane()];
        for c in fixed {
            bars.push(self.lifted_bar(c)?);
        }
        let prod = self.y.product(&bars);
        let mut acc: std::collections::BTreeMap<usize, Q> = Default::default();
        for (key, v) in self.y.dualize(&prod) {
            let wh = self.y.lift_key(&key)?;
            let w = self.fold.jstar(&wh, self.x.dim as usize)?;
            let root = self.x.root_of_weyl(&w)?;
            *acc.entry(root).or_insert_with(Q::zero) += v;
        }
        let mut out: Vec<(usize, Q)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|(r, _)| self.x.position(*r));
        Ok(out)
    }

    pub fn gw1_functional_direct(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        let got: i64 = fixed.iter().map(|c| degree_of_class(&self.x, c)).sum::<Result<i64, _>>()?;
        let d = self.expected_degree(fixed.len() + 1) - got;
        let mut out = Vec::new();
        for r in self.x.basis_of_degree(d) {
            let mut all = fixed.to_vec();
            all.push(CohClass::basis(r));
            let v = self.gw1(&all)?;
            if !v.is_zero() {
                out.push((r, v));
            }
        }
        out.sort_by_key(|(r, _)| self.x.position(*r));
        Ok(out)
    }
}

/// Either evaluator behind one interface.
pub enum Gw1 {
    SimplyLaced(LineGeometry),
    Folded(FoldedLineGeometry),
}

impl Gw1 {
    pub fn new(x: CoadjointVariety) -> Result<Self, CoreError> {
        if x.is_simply_laced() {
            Ok(Gw1::SimplyLaced(LineGeometry::new(x)?))
        } else {
            Ok(Gw1::Folded(FoldedLineGeometry::new(x)?))
        }
    }

    pub fn x(&self) -> &CoadjointVariety {
        match self {
            Gw1::SimplyLaced(g) => &g.x,
            Gw1::Folded(g) => &g.x,
        }
    }

    pub fn gw1(&self, classes: &[CohClass]) -> Result<Q, CoreError> {
        match self {
            Gw1::SimplyLaced(g) => g.gw1(classes),
            Gw1::Folded(g) => g.gw1(classes),
        }
    }

    pub fn coeff_extract(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        match self {
            Gw1::SimplyLaced(g) => g.gw1_coeff_extract(fixed),
            Gw1::Folded(g) => g.gw1_coeff_extract(fixed),
        }
    }

    pub fn functional_direct(&self, fixed: &[CohClass]) -> Result<Vec<(usize, Q)>, CoreError> {
        match self {
            Gw1::SimplyLaced(g) => g.gw1_functional_direct(fixed),
            Gw1::Folded(g) => g.gw1_functional_direct(fixed),
        }
    }
}

/// Unit class helper for callers that build queries by name.
pub fn named(x: &CoadjointVariety, names: &[&str]) -> Result<Vec<CohClass>, CoreError> {
    names.iter().map(|n| x.named_class(n)).collect()
}
