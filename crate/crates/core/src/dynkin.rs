//! Dynkin types and Cartan matrices in Bourbaki numbering.

use std::fmt;
use std::str::FromStr;

use crate::CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CoreError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(CoreError::InvalidRank(family, rank))
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid A rank")
    }
    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("valid B rank")
    }
    pub fn c(n: usize) -> Self {
        Self::new(Family::C, n).expect("valid C rank")
    }
    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid D rank")
    }
    pub fn e(n: usize) -> Self {
        Self::new(Family::E, n).expect("valid E rank")
    }
    pub fn f4() -> Self {
        DynkinType { family: Family::F, rank: 4 }
    }
    pub fn g2() -> Self {
        DynkinType { family: Family::G, rank: 2 }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` (0-based indices).
    ///
    /// For G2 node 1 is the long root and node 2 the short one.
    pub fn cartan(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i, i + 1);
                }
                link(n - 2, n);
            }
            Family::E => {
                link(1, 3);
                link(2, 4);
                for i in 3..n {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(1, 2);
                link(2, 3);
                link(3, 4);
            }
            Family::G => link(1, 2),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }

    /// Half squared lengths of the simple roots, normalized so that short roots have 1.
    pub fn symmetrizer(&self) -> Vec<i32> {
        let n = self.rank;
        match self.family {
            Family::B => (1..=n).map(|i| if i == n { 1 } else { 2 }).collect(),
            Family::C => (1..=n).map(|i| if i == n { 2 } else { 1 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![3, 1],
            _ => vec![1; n],
        }
    }

    /// Pairs of adjacent nodes (1-based).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let a = self.cartan();
        let mut e = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if a[i][j] != 0 {
                    e.push((i + 1, j + 1));
                }
            }
        }
        e
    }

    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        let a = self.cartan();
        (1..=self.rank).filter(|&j| j != node && a[node - 1][j - 1] != 0).collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(CoreError::Parse(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| CoreError::Parse(s.to_string()))?;
        DynkinType::new(fam, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_constraints() {
        assert!(DynkinType::new(Family::D, 3).is_err());
        assert!(DynkinType::new(Family::E, 9).is_err());
        assert!(DynkinType::new(Family::F, 4).is_ok());
        assert!(DynkinType::new(Family::A, 0).is_err());
        assert_eq!("E7".parse::<DynkinType>().unwrap(), DynkinType::e(7));
        assert!("X3".parse::<DynkinType>().is_err());
    }

    #[test]
    fn symmetrized_cartan_is_symmetric() {
        for t in [DynkinType::b(4), DynkinType::c(3), DynkinType::f4(), DynkinType::g2(), DynkinType::e(8)] {
            let a = t.cartan();
            let d = t.symmetrizer();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{t} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn e6_branch_node() {
        assert_eq!(DynkinType::e(6).neighbors(4), vec![2, 3, 5]);
        assert_eq!(DynkinType::d(5).neighbors(3), vec![2, 4, 5]);
    }
}
