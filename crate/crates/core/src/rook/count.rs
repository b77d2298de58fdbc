use std::collections::HashMap;

use crate::rook::{PartialPermutation, MAX_N};

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `|R_n| = Σ_k C(n,k)² k!`.
pub fn size(n: usize) -> u64 {
    (0..=n)
        .map(|k| binomial(n, k) * binomial(n, k) * factorial(k))
        .sum()
}

/// `|R_n|` from `|R_n| = 2n|R_{n-1}| - (n-1)²|R_{n-2}|` with `|R_0| = 1`,
/// `|R_1| = 2`, `|R_2| = 7`.
pub fn size_recursive(n: usize) -> u64 {
    let base = [1u64, 2, 7];
    if n < 3 {
        return base[n];
    }
    let (mut prev2, mut prev1) = (base[1], base[2]);
    for m in 3..=n {
        let m64 = m as u64;
        let next = 2 * m64 * prev1 - (m64 - 1) * (m64 - 1) * prev2;
        prev2 = prev1;
        prev1 = next;
    }
    prev1
}

/// Ones in the zeta matrix of `R_n`, counted row by row: `Σ_k C(n,k)² k! |R_{n-k}|`.
pub fn zeta_ones_by_rows(n: usize) -> u64 {
    (0..=n)
        .map(|k| binomial(n, k).pow(2) * factorial(k) * size(n - k))
        .sum()
}

/// Ones in the zeta matrix of `R_n`, counted column by column: `Σ_k C(n,k)² k! 2^k`.
pub fn zeta_ones_by_columns(n: usize) -> u64 {
    (0..=n)
        .map(|k| binomial(n, k).pow(2) * factorial(k) * (1u64 << k))
        .sum()
}

/// Every element of `R_n`, in canonical (sorted) order.
pub fn enumerate(n: usize) -> Vec<PartialPermutation> {
    assert!(n <= MAX_N);
    let mut out = Vec::with_capacity(size(n) as usize);
    let mut images = vec![None; n];
    fill(n, 0, 0, &mut images, &mut out);
    out
}

fn fill(
    n: usize,
    pos: usize,
    used: u32,
    images: &mut Vec<Option<usize>>,
    out: &mut Vec<PartialPermutation>,
) {
    if pos == n {
        out.push(PartialPermutation::new(n, images).expect("valid by construction"));
        return;
    }
    images[pos] = None;
    fill(n, pos + 1, used, images, out);
    for v in 1..=n {
        if used & (1 << v) == 0 {
            images[pos] = Some(v);
            fill(n, pos + 1, used | (1 << v), images, out);
        }
    }
    images[pos] = None;
}

/// All permutations of `{1, …, k}` in canonical order.
pub fn permutations(k: usize) -> Vec<PartialPermutation> {
    enumerate(k).into_iter().filter(|s| s.is_total()).collect()
}

/// An enumeration of `R_n` with constant-time lookup of positions.
#[derive(Clone, Debug)]
pub struct Enumeration {
    n: usize,
    elements: Vec<PartialPermutation>,
    index: HashMap<PartialPermutation, usize>,
}

impl Enumeration {
    pub fn new(n: usize) -> Self {
        Self::from_elements(n, enumerate(n))
    }

    /// The total elements only (`S_n`).
    pub fn symmetric(n: usize) -> Self {
        Self::from_elements(n, permutations(n))
    }

    fn from_elements(n: usize, elements: Vec<PartialPermutation>) -> Self {
        let index = elements.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Self { n, elements, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialPermutation] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> PartialPermutation {
        self.elements[i]
    }

    pub fn index_of(&self, s: &PartialPermutation) -> Option<usize> {
        self.index.get(s).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn sizes_from_base_case_arithmetic() {
        assert_eq!(size(0), 1);
        assert_eq!(size(1), 2);
        assert_eq!(size(2), 7);
        assert_eq!(size(3), 34);
        assert_eq!(size(4), 209);
        assert_eq!(size(5), 1546);
        assert_eq!(size(6), 13327);
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 0..=12 {
            assert_eq!(size(n), size_recursive(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_complete_and_sorted() {
        for n in 0..=5 {
            let all = enumerate(n);
            assert_eq!(all.len() as u64, size(n));
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn zeta_matrix_counts_agree() {
        for n in 0..=8 {
            assert_eq!(zeta_ones_by_rows(n), zeta_ones_by_columns(n));
        }
        // brute force the row count on R_3
        let all = enumerate(3);
        let ones = all
            .iter()
            .map(|s| all.iter().filter(|x| s.leq(x)).count() as u64)
            .sum::<u64>();
        assert_eq!(ones, zeta_ones_by_rows(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(16, 8), 12870);
    }
}
