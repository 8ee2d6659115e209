//! Integer partitions and the staircase shapes that index the characters.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing nonnegative parts; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeMismatch(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part i (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// (m−1, m−1, m−2, m−2, …, 1, 1).
    pub fn doubled_staircase(m: usize) -> Self {
        Partition((1..m).rev().flat_map(|k| [k, k]).collect())
    }

    /// (m, m−1, m−1, …, 1, 1).
    pub fn capped_staircase(m: usize) -> Self {
        let mut v = Vec::with_capacity(2 * m);
        if m > 0 {
            v.push(m);
        }
        v.extend(Partition::doubled_staircase(m).0);
        Partition(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(Partition::doubled_staircase(3).parts(), &[2, 2, 1, 1]);
        assert_eq!(Partition::capped_staircase(3).parts(), &[3, 2, 2, 1, 1]);
        assert!(Partition::doubled_staircase(1).is_empty());
        assert!(Partition::capped_staircase(0).is_empty());
        assert_eq!(Partition::capped_staircase(1).parts(), &[1]);
    }

    #[test]
    fn monotone() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().len(), 2);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().to_string(), "(2,1)");
    }
}
