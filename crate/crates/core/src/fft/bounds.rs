//! Closed-form operation bounds, rounded down to integers so that they can be
//! compared exactly against [`OpCounter`](super::OpCounter) readings.

use crate::rook::{binomial, factorial, size};

/// `|R_n|²`: the naive transform touches every block once per element.
pub fn naive_bound(n: usize) -> u64 {
    size(n).pow(2)
}

/// `Σ_k C(n,k)² (2/3)k(k+1)²k!`: one Clausen FFT on `S_k` per pair of `k`-subsets.
pub fn stein_bound(n: usize) -> u64 {
    let numerator: u128 = (0..=n)
        .map(|k| {
            let c = binomial(n, k) as u128;
            c * c * 2 * (k * (k + 1) * (k + 1)) as u128 * factorial(k) as u128
        })
        .sum();
    (numerator / 3) as u64
}

/// `2^n |R_n|`: the zeta transform to the groupoid basis.
pub fn zeta_bound(n: usize) -> u64 {
    (1u64 << n) * size(n)
}

/// [`zeta_bound`] plus [`stein_bound`].
pub fn stein_semigroup_bound(n: usize) -> u64 {
    zeta_bound(n) + stein_bound(n)
}

/// The recurrence `T_n = 2n T_{n-1} + 2n²|R_n|` from the naive base `T_2 = |R_2|² = 49`.
pub fn recursive_bound(n: usize) -> u64 {
    if n <= 2 {
        return naive_bound(n);
    }
    let n64 = n as u64;
    2 * n64 * recursive_bound(n - 1) + 2 * n64 * n64 * size(n)
}

/// `2^n n |R_n|`, which dominates [`recursive_bound`] from `n = 5` on.
pub fn recursive_closed_bound(n: usize) -> u64 {
    (1u64 << n) * n as u64 * size(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_values() {
        assert_eq!(recursive_bound(2), 49);
        assert_eq!(recursive_bound(3), 906);
        assert_eq!(recursive_bound(4), 13936);
        assert_eq!(recursive_bound(5), 216660);
        assert_eq!(recursive_closed_bound(5), 247360);
        for n in 5..=10 {
            assert!(recursive_bound(n) <= recursive_closed_bound(n), "n = {n}");
        }
    }

    #[test]
    fn stein_bound_small() {
        assert_eq!(stein_bound(0), 0);
        // k = 1 contributes 8/3 per cell
        assert_eq!(stein_bound(1), 2);
        assert_eq!(stein_bound(2), (4 * 8 + 2 * 18 * 2) / 3);
    }
}
