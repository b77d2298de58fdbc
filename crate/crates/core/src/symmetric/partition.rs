use std::fmt;

use crate::error::{Result, RookError};

/// An integer partition, identified with its Young diagram. Trailing zeros are
/// stripped, so `(2,1,0) == (2,1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(RookError::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Self(v))
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rows (0-based) whose last box is a corner, top to bottom.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&r| r + 1 == self.0.len() || self.0[r] > self.0[r + 1])
            .collect()
    }

    /// Removes the last box of row `row`, which must be a corner.
    pub fn remove_corner(&self, row: usize) -> Self {
        debug_assert!(self.corners().contains(&row));
        let mut v = self.0.clone();
        v[row] -= 1;
        Self::new(&v).expect("removing a corner keeps the shape valid")
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        let v: Vec<usize> = (0..cols)
            .map(|c| self.0.iter().filter(|&&p| p > c).count())
            .collect();
        Self(v)
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: u64 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                hooks *= ((len - c - 1) + (conj.0[c] - r - 1) + 1) as u64;
            }
        }
        crate::rook::factorial(self.weight()) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `k`, reverse-lexicographic: `(k), (k-1,1), …, (1^k)`.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_zeros_and_validates() {
        assert_eq!(Partition::new(&[2, 1, 0]).unwrap(), Partition::new(&[2, 1]).unwrap());
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!(Partition::new(&[0]).unwrap(), Partition::empty());
    }

    #[test]
    fn corners_top_to_bottom() {
        let p = Partition::new(&[5, 5, 3, 1]).unwrap();
        assert_eq!(p.corners(), vec![1, 2, 3]);
        assert_eq!(Partition::new(&[2, 1, 1]).unwrap().corners(), vec![0, 2]);
        assert!(Partition::empty().corners().is_empty());
    }

    #[test]
    fn enumerates_partitions() {
        let counts: Vec<usize> = (0..=7).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(
            partitions_of(3),
            vec![
                Partition::new(&[3]).unwrap(),
                Partition::new(&[2, 1]).unwrap(),
                Partition::new(&[1, 1, 1]).unwrap()
            ]
        );
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(Partition::new(&[2, 1, 1]).unwrap().hook_dimension(), 3);
        assert_eq!(Partition::new(&[3, 2]).unwrap().hook_dimension(), 5);
        assert_eq!(Partition::empty().hook_dimension(), 1);
    }
}
