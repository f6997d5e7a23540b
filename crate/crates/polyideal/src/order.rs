//! Weighted degree-reverse-lexicographic orders with variable precedence.

use std::cmp::Ordering;

use crate::poly::Ring;
use crate::PolyError;

/// Variables are listed by precedence, highest first, and split into
/// consecutive blocks. Blocks compare in turn, each by weighted degree and
/// then reverse-lexicographically; several blocks give an elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
    blocks: Vec<usize>,
}

impl MonomialOrder {
    /// Weighted degrevlex with `x_0 > x_1 > ...`.
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { precedence: (0..nvars).collect(), blocks: vec![nvars] }
    }

    /// Weighted degrevlex with precedence given by variable names.
    pub fn with_precedence(ring: &Ring, names: &[&str]) -> Result<Self, PolyError> {
        let precedence = names
            .iter()
            .map(|n| ring.index(n).ok_or_else(|| PolyError::UnknownVariable(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialOrder::blocks(ring.nvars(), vec![precedence])
    }

    /// A block order: the first block is compared first.
    pub fn blocks(nvars: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PolyError> {
        let precedence: Vec<usize> = blocks.iter().flatten().copied().collect();
        let mut seen = precedence.clone();
        seen.sort_unstable();
        if seen != (0..nvars).collect::<Vec<_>>() {
            return Err(PolyError::BadOrder(format!("{precedence:?} is not a permutation of 0..{nvars}")));
        }
        Ok(MonomialOrder { precedence, blocks: blocks.iter().map(Vec::len).filter(|&l| l > 0).collect() })
    }

    /// Order eliminating `vars`: any monomial involving them exceeds every
    /// monomial free of them.
    pub fn eliminating(nvars: usize, vars: &[usize]) -> Self {
        let rest: Vec<usize> = (0..nvars).filter(|i| !vars.contains(i)).collect();
        MonomialOrder::blocks(nvars, vec![vars.to_vec(), rest]).expect("valid blocks")
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.blocks
    }

    /// A vector whose lexicographic order is the monomial order.
    pub fn key(&self, ring: &Ring, m: &[u32]) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.blocks.len() + m.len());
        let mut start = 0;
        for &len in &self.blocks {
            let vars = &self.precedence[start..start + len];
            out.push(vars.iter().map(|&i| i64::from(m[i]) * ring.weight(i)).sum());
            out.extend(vars.iter().rev().map(|&i| -i64::from(m[i])));
            start += len;
        }
        out
    }

    pub fn cmp(&self, ring: &Ring, a: &[u32], b: &[u32]) -> Ordering {
        let mut start = 0;
        for &len in &self.blocks {
            let vars = &self.precedence[start..start + len];
            let da: i64 = vars.iter().map(|&i| i64::from(a[i]) * ring.weight(i)).sum();
            let db: i64 = vars.iter().map(|&i| i64::from(b[i]) * ring.weight(i)).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            for &i in vars.iter().rev() {
                match b[i].cmp(&a[i]) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            start += len;
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::new(&[("x", 1), ("y", 1), ("z", 2)])
    }

    #[test]
    fn degrevlex_basics() {
        let r = ring();
        let o = MonomialOrder::degrevlex(3);
        // equal weighted degree: revlex prefers the smaller last exponent
        assert_eq!(o.cmp(&r, &[2, 0, 0], &[0, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&r, &[1, 1, 0], &[2, 0, 0]), Ordering::Less);
        assert_eq!(o.cmp(&r, &[0, 0, 2], &[3, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn key_agrees_with_cmp() {
        let r = ring();
        let orders =
            [MonomialOrder::degrevlex(3), MonomialOrder::eliminating(3, &[2]), MonomialOrder::with_precedence(&r, &["z", "x", "y"]).unwrap()];
        let monos: Vec<Vec<u32>> = (0..27).map(|k| vec![k % 3, (k / 3) % 3, k / 9]).collect();
        for o in &orders {
            for a in &monos {
                for b in &monos {
                    assert_eq!(o.cmp(&r, a, b), o.key(&r, a).cmp(&o.key(&r, b)));
                }
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let r = ring();
        let o = MonomialOrder::eliminating(3, &[0]);
        assert_eq!(o.cmp(&r, &[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert!(MonomialOrder::blocks(3, vec![vec![0, 0], vec![1]]).is_err());
    }
}
