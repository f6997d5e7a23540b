//! Root systems in simple-root coordinates.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::dynkin::DynkinType;
use crate::CoreError;

pub type Root = Vec<i32>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub dynkin: DynkinType,
    pub cartan: Vec<Vec<i32>>,
    sym: Vec<i32>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    n_positive: usize,
    short_mask: Vec<bool>,
    heights: Vec<i32>,
    pub theta: usize,
    pub big_theta: usize,
    pub delta: Option<usize>,
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> Self {
        let cartan = dynkin.cartan();
        let sym = dynkin.symmetrizer();
        let n = dynkin.rank;
        let simple: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();

        let mut seen: HashSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.into_iter().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let r = reflect(&cartan, i, &b);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Root> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        pos.sort_by_key(|r| (r.iter().sum::<i32>(), r.clone()));
        let n_positive = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let form = |a: &Root, b: &Root| -> i32 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += a[i] * b[j] * sym[i] * cartan[i][j];
                }
            }
            s
        };
        let norms: Vec<i32> = roots.iter().map(|r| form(r, r)).collect();
        let min_norm = *norms.iter().min().unwrap();
        let short_mask: Vec<bool> = norms.iter().map(|&x| x == min_norm).collect();
        let heights: Vec<i32> = roots.iter().map(|r| r.iter().map(|c| c.abs()).sum()).collect();

        let highest = |filter: &dyn Fn(usize) -> bool| -> usize {
            (0..n_positive).filter(|&i| filter(i)).max_by_key(|&i| heights[i]).unwrap()
        };
        let big_theta = highest(&|_| true);
        let theta = highest(&|i| short_mask[i]);
        let delta = if theta == big_theta {
            None
        } else {
            let d: Root = roots[big_theta].iter().zip(&roots[theta]).map(|(a, b)| a - b).collect();
            index.get(&d).copied()
        };
        RootSystem { dynkin, cartan, sym, roots, index, n_positive, short_mask, heights, theta, big_theta, delta }
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &[i32]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn try_index(&self, r: &[i32]) -> Result<usize, CoreError> {
        self.index_of(r).ok_or_else(|| CoreError::NotARoot(r.to_vec()))
    }

    pub fn simple(&self, node: usize) -> usize {
        self.index[&unit(self.rank(), node - 1)]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_positive
    }

    pub fn is_simple(&self, i: usize) -> bool {
        self.heights[i] == 1 && self.is_positive(i)
    }

    /// The node of a simple root.
    pub fn simple_node(&self, i: usize) -> Option<usize> {
        if self.is_simple(i) {
            self.roots[i].iter().position(|&c| c == 1).map(|p| p + 1)
        } else {
            None
        }
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_positive {
            i + self.n_positive
        } else {
            i - self.n_positive
        }
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.short_mask[i]
    }

    pub fn short_mask(&self) -> &[bool] {
        &self.short_mask
    }

    pub fn height(&self, i: usize) -> i32 {
        self.heights[i]
    }

    /// Height of an arbitrary integer vector, if it is a root.
    pub fn height_of(&self, r: &[i32]) -> Result<i32, CoreError> {
        Ok(self.heights[self.try_index(r)?])
    }

    /// Symmetric invariant form, normalized so short roots have `(a,a) = 2`.
    pub fn form(&self, a: &[i32], b: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * b[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<a^vee, b> = 2(a,b)/(a,a)` for a root `a`.
    pub fn pairing(&self, a: &[i32], b: &[i32]) -> i32 {
        let num = 2 * self.form(a, b);
        let den = self.form(a, a);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `<alpha_i^vee, v>` for the simple root of `node`.
    pub fn simple_pairing(&self, node: usize, v: &[i32]) -> i32 {
        self.cartan[node - 1].iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn reflect_simple(&self, node: usize, v: &[i32]) -> Root {
        reflect(&self.cartan, node - 1, v)
    }

    /// Coefficient vector of `a - b` when it is a root.
    pub fn difference(&self, a: usize, b: usize) -> Option<usize> {
        let d: Root = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - y).collect();
        self.index_of(&d)
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let d: Root = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&d)
    }

    /// `a <= b` in the dominance order (b - a has non-negative coefficients).
    pub fn dominance_leq(&self, a: usize, b: usize) -> bool {
        self.roots[a].iter().zip(&self.roots[b]).all(|(x, y)| x <= y)
    }

    /// Formats a root as `a(010110)` (digits, or comma separated when negative or > 9).
    pub fn label(&self, i: usize) -> String {
        root_label(&self.roots[i])
    }

    pub fn parse_label(&self, s: &str) -> Result<usize, CoreError> {
        let v = parse_root_label(s, self.rank())?;
        self.try_index(&v)
    }
}

pub fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn reflect(cartan: &[Vec<i32>], i: usize, v: &[i32]) -> Root {
    let p: i32 = cartan[i].iter().zip(v).map(|(a, b)| a * b).sum();
    let mut r = v.to_vec();
    r[i] -= p;
    r
}

pub fn root_label(r: &[i32]) -> String {
    if r.iter().all(|&c| (0..=9).contains(&c)) {
        format!("a({})", r.iter().map(|c| c.to_string()).collect::<String>())
    } else {
        format!("a({})", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

pub fn parse_root_label(s: &str, rank: usize) -> Result<Root, CoreError> {
    let bad = || CoreError::Parse(s.to_string());
    let body = s.trim().strip_prefix("a(").and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
    let v: Root = if body.contains(',') {
        body.split(',').map(|x| x.trim().parse::<i32>().map_err(|_| bad())).collect::<Result<_, _>>()?
    } else {
        body.chars().map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(bad)).collect::<Result<_, _>>()?
    };
    if v.len() != rank {
        return Err(bad());
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let cases = [
            (DynkinType::a(1), 2),
            (DynkinType::a(5), 30),
            (DynkinType::b(3), 18),
            (DynkinType::c(4), 32),
            (DynkinType::d(5), 40),
            (DynkinType::d(7), 84),
            (DynkinType::e(6), 72),
            (DynkinType::e(7), 126),
            (DynkinType::e(8), 240),
            (DynkinType::f4(), 48),
            (DynkinType::g2(), 12),
        ];
        for (t, n) in cases {
            assert_eq!(RootSystem::new(t).len(), n, "{t}");
        }
    }

    #[test]
    fn distinguished_roots() {
        let d5 = RootSystem::new(DynkinType::d(5));
        assert_eq!(d5.root(d5.theta), &vec![1, 2, 2, 1, 1]);
        assert_eq!(d5.theta, d5.big_theta);
        assert!(d5.short_mask().iter().all(|&b| b));

        let f4 = RootSystem::new(DynkinType::f4());
        assert_eq!(f4.root(f4.delta.unwrap()), &vec![1, 1, 1, 0]);
        assert_eq!(f4.root(f4.big_theta), &vec![2, 3, 4, 2]);
        assert_eq!(f4.root(f4.theta), &vec![1, 2, 3, 2]);
        assert_eq!(f4.short_mask().iter().filter(|&&b| b).count(), 24);

        let a1 = RootSystem::new(DynkinType::a(1));
        assert_eq!(a1.roots(), &[vec![1], vec![-1]]);
        assert_eq!(a1.theta, a1.big_theta);

        let g2 = RootSystem::new(DynkinType::g2());
        assert_eq!(g2.root(g2.big_theta), &vec![2, 3]);
        assert_eq!(g2.root(g2.theta), &vec![1, 2]);
        assert_eq!(g2.root(g2.delta.unwrap()), &vec![1, 1]);

        let b4 = RootSystem::new(DynkinType::b(4));
        assert_eq!(b4.root(b4.delta.unwrap()), &vec![0, 1, 1, 1]);
        let c4 = RootSystem::new(DynkinType::c(4));
        assert_eq!(c4.root(c4.delta.unwrap()), &vec![1, 0, 0, 0]);
    }

    #[test]
    fn heights_of_highest_roots() {
        assert_eq!(RootSystem::new(DynkinType::e(6)).height(RootSystem::new(DynkinType::e(6)).big_theta), 11);
        let e8 = RootSystem::new(DynkinType::e(8));
        assert_eq!(e8.height(e8.big_theta), 29);
        for node in 1..=8 {
            assert_eq!(e8.height(e8.simple(node)), 1);
        }
        assert!(e8.height_of(&[1, 0, 0, 0, 0, 0, 0, 3]).is_err());
    }

    #[test]
    fn labels_round_trip() {
        let e6 = RootSystem::new(DynkinType::e(6));
        let i = e6.parse_label("a(010110)").unwrap();
        assert_eq!(e6.label(i), "a(010110)");
        let n = e6.negate(i);
        assert_eq!(e6.parse_label(&e6.label(n)).unwrap(), n);
        assert!(e6.parse_label("a(01011)").is_err());
    }
}
