//! Diagram foldings `G^ -> G` and the transfer of Weyl group elements
//! between a non simply-laced coadjoint `X = G/P` and the simply-laced `Y = G^/P^`.

use std::collections::HashMap;

use crate::dynkin::{DynkinType, Family};
use crate::roots::RootSystem;
use crate::weyl::{ParabolicSubset, WeylElement};
use crate::CoreError;

/// A folding: `orbit[i - 1]` is the node of `G` under node `i` of `G^`.
pub struct FoldingMap {
    pub source: DynkinType,
    pub target: DynkinType,
    pub orbit: Vec<usize>,
    pub sigma_order: usize,
    /// Node of `P^` in `G^` and node of `P` in `G`.
    pub source_node: usize,
    pub target_node: usize,
    pub src: RootSystem,
    pub tgt: RootSystem,
}

impl FoldingMap {
    /// The folding whose fixed group is `target` (types B, C, F4, G2).
    pub fn for_target(target: DynkinType) -> Result<Self, CoreError> {
        let n = target.rank;
        let (source, orbit, order, sn, tn) = match target.family {
            Family::B => {
                let mut o: Vec<usize> = (1..=n).collect();
                o.push(n);
                (DynkinType::d(n + 1), o, 2, 1, 1)
            }
            Family::C => {
                let o = (1..2 * n).map(|i| if i <= n { i } else { 2 * n - i }).collect();
                (DynkinType::a(2 * n - 1), o, 2, 2, 2)
            }
            Family::F => (DynkinType::e(6), vec![4, 1, 3, 2, 3, 4], 2, 1, 4),
            Family::G => (DynkinType::d(4), vec![2, 1, 2, 2], 3, 1, 2),
            _ => return Err(CoreError::Unsupported(format!("no folding onto {target}"))),
        };
        let map = FoldingMap {
            source,
            target,
            orbit,
            sigma_order: order,
            source_node: sn,
            target_node: tn,
            src: RootSystem::new(source),
            tgt: RootSystem::new(target),
        };
        map.check_table()?;
        Ok(map)
    }

    /// Orbits are non-adjacent and the folded Cartan matrix is the target's.
    fn check_table(&self) -> Result<(), CoreError> {
        let cs = self.source.cartan();
        let ct = self.target.cartan();
        for a in 1..=self.source.rank {
            for b in 1..=self.source.rank {
                if a != b && self.orbit[a - 1] == self.orbit[b - 1] && cs[a - 1][b - 1] != 0 {
                    return Err(CoreError::Invariant("adjacent nodes in one orbit".into()));
                }
                let s: i32 = self.preimage(self.orbit[a - 1]).iter().map(|&g| cs[g - 1][b - 1]).sum();
                if s != ct[self.orbit[a - 1] - 1][self.orbit[b - 1] - 1] {
                    return Err(CoreError::Invariant("folding does not reproduce the Cartan matrix".into()));
                }
            }
        }
        Ok(())
    }

    pub fn pi(&self, node: usize) -> usize {
        self.orbit[node - 1]
    }

    pub fn preimage(&self, node: usize) -> Vec<usize> {
        (1..=self.source.rank).filter(|&i| self.orbit[i - 1] == node).collect()
    }

    pub fn source_parabolic(&self) -> ParabolicSubset {
        ParabolicSubset::new([self.source_node])
    }

    pub fn target_parabolic(&self) -> ParabolicSubset {
        ParabolicSubset::new([self.target_node])
    }

    /// Word image of `pi_*` on a word of `W_G`.
    pub fn pi_star_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().flat_map(|&i| self.preimage(i)).collect()
    }

    /// The embedding `W_G = (W_G^)^sigma`.
    pub fn pi_star(&self, w: &WeylElement) -> WeylElement {
        let word = self.tgt.reduced_word(w);
        self.src.from_word(&self.pi_star_word(&word)).expect("valid nodes")
    }

    /// `w_* = pi_*(w)^{P^}`, built letter by letter from the right, choosing
    /// the unique preimage that keeps the product in `W^{P^}` with length +1.
    pub fn w_star(&self, w: &WeylElement) -> Result<WeylElement, CoreError> {
        let word = self.tgt.reduced_word(w);
        let mut v = self.src.identity();
        let sn = self.source_node;
        for &i in word.iter().rev() {
            let vinv = self.src.inverse(&v);
            let ok: Vec<usize> = self
                .preimage(i)
                .into_iter()
                .filter(|&b| {
                    let r = self.src.act_idx(&vinv, self.src.simple(b));
                    self.src.is_positive(r) && self.src.root(r)[sn - 1] > 0
                })
                .collect();
            match ok.as_slice() {
                [b] => v = self.src.left_mul(*b, &v),
                [] => return Err(CoreError::Lift(format!("no admissible letter over s{i}"))),
                _ => return Err(CoreError::Lift(format!("several admissible letters over s{i}"))),
            }
        }
        if v.length() != word.len() {
            return Err(CoreError::Invariant("w_* lost length".into()));
        }
        Ok(v)
    }

    /// `pi^*`: letterwise image of a reduced word of a fully commutative element.
    pub fn pi_upper_star(&self, w: &WeylElement) -> Result<WeylElement, CoreError> {
        if !is_fully_commutative(&self.src, w) {
            return Err(CoreError::Unsupported("pi^* needs a fully commutative element".into()));
        }
        let word = self.src.reduced_word(w);
        if !self.image_is_commutation_invariant(&word) {
            return Err(CoreError::Unsupported("pi^* depends on the reduced word".into()));
        }
        Ok(self.pi_upper_star_word(&word))
    }

    /// Incomparable letters of the heap of `word` must fold to commuting letters.
    pub fn image_is_commutation_invariant(&self, word: &[usize]) -> bool {
        let cs = &self.src.cartan;
        let ct = &self.tgt.cartan;
        let n = word.len();
        let mut below = vec![vec![false; n]; n];
        for j in 0..n {
            for i in (0..j).rev() {
                let (a, b) = (word[i], word[j]);
                if a == b || cs[a - 1][b - 1] != 0 {
                    below[i][j] = true;
                }
                if !below[i][j] {
                    below[i][j] = (i + 1..j).any(|k| below[i][k] && below[k][j]);
                }
            }
        }
        (0..n).all(|j| {
            (0..j).all(|i| {
                let (a, b) = (self.pi(word[i]), self.pi(word[j]));
                below[i][j] || a == b || ct[a - 1][b - 1] == 0
            })
        })
    }

    pub fn pi_upper_star_word(&self, word: &[usize]) -> WeylElement {
        let img: Vec<usize> = word.iter().map(|&i| self.pi(i)).collect();
        self.tgt.from_word(&img).expect("valid nodes")
    }

    /// `w^* = pi^*(w^)^P`.
    pub fn hat_star(&self, w: &WeylElement) -> Result<WeylElement, CoreError> {
        let x = self.pi_upper_star(w)?;
        Ok(self.tgt.coset_decompose(&x, &self.target_parabolic()).0)
    }

    /// `pi^*(word)^P` for one given reduced word, with no invariance check.
    pub fn hat_star_word(&self, word: &[usize]) -> WeylElement {
        self.tgt.coset_decompose(&self.pi_upper_star_word(word), &self.target_parabolic()).0
    }

    /// `j^*(sigma_Y^{w^}) = sigma_X^{w^*}`, restricted to `l(w^) <= dim X / 2`.
    pub fn jstar(&self, w: &WeylElement, dim_x: usize) -> Result<WeylElement, CoreError> {
        if 2 * w.length() > dim_x {
            return Err(CoreError::Lift(format!("length {} exceeds half of dim X = {dim_x}", w.length())));
        }
        self.hat_star(w)
    }
}

/// Whether every reduced word of `w` is commutation-equivalent (simply-laced
/// groups, where the only braid relation is `sts = tst`).
pub fn is_fully_commutative(rs: &RootSystem, w: &WeylElement) -> bool {
    let mut memo: HashMap<WeylElement, bool> = HashMap::new();
    fc_rec(rs, w, &mut memo)
}

fn fc_rec(rs: &RootSystem, w: &WeylElement, memo: &mut HashMap<WeylElement, bool>) -> bool {
    if let Some(&b) = memo.get(w) {
        return b;
    }
    let n = rs.rank();
    let desc: Vec<usize> = (1..=n).filter(|&j| w.has_right_descent(j)).collect();
    let mut ok = true;
    'outer: for &i in &desc {
        let wi = rs.right_mul(w, i);
        for j in 1..=n {
            if j == i || rs.cartan[i - 1][j - 1] == 0 {
                continue;
            }
            if wi.has_right_descent(j) && rs.right_mul(&wi, j).has_right_descent(i) {
                ok = false;
                break 'outer;
            }
        }
    }
    if ok {
        ok = desc.iter().all(|&i| fc_rec(rs, &rs.right_mul(w, i), memo));
    }
    memo.insert(w.clone(), ok);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::format_word;

    #[test]
    fn tables_are_consistent() {
        for t in [DynkinType::b(3), DynkinType::b(5), DynkinType::c(3), DynkinType::c(4), DynkinType::f4(), DynkinType::g2()] {
            let f = FoldingMap::for_target(t).unwrap();
            assert_eq!(f.pi(f.source_node), f.target_node);
        }
        let f = FoldingMap::for_target(DynkinType::g2()).unwrap();
        assert_eq!(f.sigma_order, 3);
        assert_eq!(f.preimage(2), vec![1, 3, 4]);
    }

    #[test]
    fn f4_example() {
        let f = FoldingMap::for_target(DynkinType::f4()).unwrap();
        let w = f.tgt.from_word(&[4, 2, 3, 1, 2, 3, 4]).unwrap();
        let pw = f.pi_star(&w);
        let expect = f.src.from_word(&[1, 6, 4, 3, 5, 2, 4, 3, 5, 1, 6]).unwrap();
        assert_eq!(pw, expect);
        let ws = f.w_star(&w).unwrap();
        assert_eq!(format_word(&f.src.reduced_word(&ws)), format_word(&f.src.reduced_word(&f.src.from_word(&[6, 4, 5, 2, 4, 3, 1]).unwrap())));
        assert_eq!(ws.length(), 7);
        assert_eq!(ws, f.src.coset_decompose(&pw, &f.source_parabolic()).0);
        assert_eq!(f.hat_star(&ws).unwrap(), w);
    }

    #[test]
    fn hat_star_example() {
        let f = FoldingMap::for_target(DynkinType::f4()).unwrap();
        let word = [5, 6, 1, 3, 4, 5, 2, 4, 3, 1];
        let wh = f.src.from_word(&word).unwrap();
        assert_eq!(wh.length(), 10);
        let expect = f.tgt.from_word(&[2, 1, 3, 2, 3, 4]).unwrap();
        assert_eq!(f.hat_star_word(&word), expect);
        // other reduced words of this element fold differently
        assert!(f.hat_star(&wh).is_err());
    }

    #[test]
    fn fully_commutative() {
        let rs = RootSystem::new(DynkinType::a(2));
        assert!(is_fully_commutative(&rs, &rs.from_word(&[1, 2]).unwrap()));
        assert!(!is_fully_commutative(&rs, &rs.from_word(&[1, 2, 1]).unwrap()));
        let rs = RootSystem::new(DynkinType::e(6));
        for w in rs.min_coset_reps(&ParabolicSubset::new([1]), None) {
            assert!(is_fully_commutative(&rs, &w));
        }
    }
}
