//! Words in the generators `t_j = (j-1, j)` and the links `[m]`.
//!
//! Elements are factored with the three-way split used by the recursive FFT:
//! at level `m`, an element fixing every point above `m` is either
//! `T_i · s` (`σ(m) = i`), `s · T^i` (`σ(i) = m`, `m ∉ dom σ`), or `[m] · s`
//! (`m` neither in the domain nor the range), with `s` fixing `m`.

use crate::rook::PartialPermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `t_j = (j-1, j)`, `2 ≤ j ≤ n`.
    Transposition(usize),
    /// `[m]`: the identity with `m` removed from domain and range.
    Link(usize),
}

impl Generator {
    pub fn element(&self, n: usize) -> PartialPermutation {
        match *self {
            Generator::Transposition(j) => transposition(n, j),
            Generator::Link(m) => link(n, m),
        }
    }
}

/// `t_j = (j-1, j)` in `R_n`.
pub fn transposition(n: usize, j: usize) -> PartialPermutation {
    assert!(j >= 2 && j <= n);
    PartialPermutation::identity(n)
        .with_image(j - 1, Some(j))
        .with_image(j, Some(j - 1))
}

/// `[m] = (1)…(m-1)[m](m+1)…(n)`.
pub fn link(n: usize, m: usize) -> PartialPermutation {
    assert!(m >= 1 && m <= n);
    PartialPermutation::identity(n).with_image(m, None)
}

/// `T_i = t_{i+1} t_{i+2} ⋯ t_m` inside `R_n`; sends `m ↦ i` and `j ↦ j+1` for `i ≤ j < m`.
pub fn left_coset_rep(n: usize, m: usize, i: usize) -> PartialPermutation {
    let mut out = PartialPermutation::identity(n);
    for j in (i + 1)..=m {
        out = out * transposition(n, j);
    }
    out
}

/// `T^i = t_m t_{m-1} ⋯ t_{i+1}`, the inverse of [`left_coset_rep`].
pub fn right_coset_rep(n: usize, m: usize, i: usize) -> PartialPermutation {
    left_coset_rep(n, m, i).inverse()
}

/// A word `g_1 g_2 ⋯ g_r` whose product (composition, `g_r` applied first)
/// equals `s`. Total elements produce transposition-only words.
pub fn generator_word(s: &PartialPermutation) -> Vec<Generator> {
    let n = s.n();
    let mut prefix = Vec::new();
    let mut suffix: Vec<Vec<Generator>> = Vec::new();
    let mut cur = *s;
    for m in (1..=n).rev() {
        if let Some(i) = cur.apply(m) {
            // Type 1: cur = T_i · s'
            prefix.extend(((i + 1)..=m).map(Generator::Transposition));
            cur = left_coset_rep(n, m, i).inverse() * cur;
        } else if let Some(i) = (1..m).find(|&i| cur.apply(i) == Some(m)) {
            // Type 2: cur = s' · T^i
            suffix.push((((i + 1)..=m).rev()).map(Generator::Transposition).collect());
            cur = cur * left_coset_rep(n, m, i);
        } else {
            // Type 3: cur = [m] · s'
            prefix.push(Generator::Link(m));
            cur = cur.with_image(m, Some(m));
        }
        debug_assert_eq!(cur.apply(m), Some(m));
    }
    debug_assert_eq!(cur, PartialPermutation::identity(n));
    for part in suffix.into_iter().rev() {
        prefix.extend(part);
    }
    prefix
}

/// Multiplies a word out.
pub fn evaluate_word(n: usize, word: &[Generator]) -> PartialPermutation {
    word.iter()
        .fold(PartialPermutation::identity(n), |acc, g| acc * g.element(n))
}

/// Which piece of the three-way split an element of `R_n` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitType {
    /// `σ(n)` is defined.
    Type1,
    /// `σ(i) = n` for some `i < n` and `n ∉ dom σ`.
    Type2,
    /// `n` is in neither the domain nor the range.
    Type3,
}

pub fn split_type(s: &PartialPermutation) -> SplitType {
    let n = s.n();
    assert!(n >= 1);
    if s.apply(n).is_some() {
        SplitType::Type1
    } else if s.range().contains(n) {
        SplitType::Type2
    } else {
        SplitType::Type3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::enumerate;

    #[test]
    fn coset_reps_shift_rows() {
        let t = left_coset_rep(5, 5, 2);
        assert_eq!(t.apply(5), Some(2));
        assert_eq!(t.apply(2), Some(3));
        assert_eq!(t.apply(4), Some(5));
        assert_eq!(t.apply(1), Some(1));
        assert_eq!(left_coset_rep(5, 5, 5), PartialPermutation::identity(5));
        let u = right_coset_rep(5, 5, 2);
        assert_eq!(u.apply(2), Some(5));
        assert_eq!(u.apply(5), Some(4));
    }

    #[test]
    fn words_multiply_back() {
        for n in 0..=4 {
            for s in enumerate(n) {
                let w = generator_word(&s);
                assert_eq!(evaluate_word(n, &w), s, "{s:?} -> {w:?}");
                if s.is_total() {
                    assert!(w.iter().all(|g| matches!(g, Generator::Transposition(_))));
                }
            }
        }
    }

    #[test]
    fn split_counts_in_r3() {
        let all = enumerate(3);
        let count = |t| all.iter().filter(|s| split_type(s) == t).count();
        assert_eq!(count(SplitType::Type1), 21);
        assert_eq!(count(SplitType::Type2), 6);
        assert_eq!(count(SplitType::Type3), 7);
    }
}
