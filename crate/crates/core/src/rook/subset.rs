use std::fmt;

use crate::error::{Result, RookError};
use crate::rook::count::binomial;
use crate::rook::{PartialPermutation, MAX_N};

/// A subset of `{1, …, n}` read as a strictly increasing sequence.
///
/// k-subsets are ordered colexicographically, which for a fixed `k` is the
/// numeric order of the bitmasks; `{1, …, k}` is always first and the index of
/// a subset does not change when `n` grows.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderedKSubset {
    n: u8,
    mask: u32,
}

impl OrderedKSubset {
    /// Validates that `elements` is strictly increasing inside `1..=n`.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        if n > MAX_N {
            return Err(RookError::InvalidArgument(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut mask = 0u32;
        let mut prev = 0;
        for &x in elements {
            if x == 0 || x > n {
                return Err(RookError::InvalidArgument(format!("{x} is outside 1..={n}")));
            }
            if x <= prev {
                return Err(RookError::InvalidArgument(
                    "subset elements must be strictly increasing".into(),
                ));
            }
            prev = x;
            mask |= 1 << (x - 1);
        }
        Ok(Self { n: n as u8, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u32) -> Self {
        debug_assert!(n == 32 || mask >> n == 0);
        Self { n: n as u8, mask }
    }

    /// `{1, …, k}` inside `{1, …, n}`.
    pub fn first(n: usize, k: usize) -> Self {
        assert!(k <= n);
        Self::from_mask(n, (1u32 << k) - 1)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= 1 && self.mask & (1 << (x - 1)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&x| self.contains(x))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position among the k-subsets in colex order (combinatorial number system).
    pub fn colex_index(&self) -> usize {
        self.iter()
            .enumerate()
            .map(|(i, x)| binomial(x - 1, i + 1) as usize)
            .sum()
    }
}

impl fmt::Debug for OrderedKSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

/// All k-subsets of `{1, …, n}` in colex order.
pub fn k_subsets(n: usize, k: usize) -> Vec<OrderedKSubset> {
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(OrderedKSubset::from_mask(n, 0));
        return out;
    }
    // Gosper's hack enumerates equal-popcount masks in increasing order.
    let mut mask: u32 = (1 << k) - 1;
    let limit: u32 = 1 << n;
    while mask < limit {
        out.push(OrderedKSubset::from_mask(n, mask));
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// The unique order-preserving bijection `A → B`, as an element of `R_n`.
pub fn order_preserving(a: &OrderedKSubset, b: &OrderedKSubset) -> Result<PartialPermutation> {
    if a.n() != b.n() {
        return Err(RookError::Dimension(format!(
            "subsets live in different ambient sizes {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a.k() != b.k() {
        return Err(RookError::Dimension(format!(
            "|A| = {} but |B| = {}",
            a.k(),
            b.k()
        )));
    }
    let mut out = PartialPermutation::zero(a.n());
    for (x, y) in a.iter().zip(b.iter()) {
        out = out.with_image(x, Some(y));
    }
    Ok(out)
}

/// `x = p_{[k]→ran} · y · p_{dom→[k]}` with `y ∈ S_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalFactorization {
    pub ran: OrderedKSubset,
    /// A total permutation of `{1, …, k}` (ambient size `k`).
    pub y: PartialPermutation,
    pub dom: OrderedKSubset,
}

impl CanonicalFactorization {
    pub fn rank(&self) -> usize {
        self.y.n()
    }

    /// Rebuilds the factored element of `R_n`.
    pub fn reassemble(&self) -> PartialPermutation {
        embed_through(&self.ran, &self.y, &self.dom)
    }
}

/// `p_{[k]→A} · y · p_{B→[k]}` for `y ∈ S_k` given with ambient size `k`.
pub fn embed_through(
    a: &OrderedKSubset,
    y: &PartialPermutation,
    b: &OrderedKSubset,
) -> PartialPermutation {
    debug_assert_eq!(a.k(), y.n());
    debug_assert_eq!(b.k(), y.n());
    let a_elems: Vec<usize> = a.iter().collect();
    let mut out = PartialPermutation::zero(a.n());
    for (i, x) in b.iter().enumerate() {
        let yi = y.apply(i + 1).expect("y must be a total permutation");
        out = out.with_image(x, Some(a_elems[yi - 1]));
    }
    out
}

/// Factors `x` through the symmetric group on its rank.
pub fn factorize(x: &PartialPermutation) -> CanonicalFactorization {
    let dom = x.domain();
    let ran = x.range();
    let k = dom.k();
    let ran_elems: Vec<usize> = ran.iter().collect();
    let mut images = vec![None; k];
    for (i, d) in dom.iter().enumerate() {
        let target = x.apply(d).expect("domain point");
        let pos = ran_elems.binary_search(&target).expect("range point");
        images[i] = Some(pos + 1);
    }
    let y = PartialPermutation::new(k, &images).expect("factor is a permutation");
    CanonicalFactorization { ran, y, dom }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::enumerate;

    #[test]
    fn colex_order_and_index() {
        let subs = k_subsets(4, 2);
        let elems: Vec<_> = subs.iter().map(|s| s.elements()).collect();
        assert_eq!(
            elems,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        for (i, s) in subs.iter().enumerate() {
            assert_eq!(s.colex_index(), i);
        }
        assert_eq!(k_subsets(5, 0).len(), 1);
        assert_eq!(k_subsets(5, 3).len(), 10);
        assert_eq!(k_subsets(3, 4).len(), 0);
    }

    #[test]
    fn first_subset_is_initial_segment() {
        for n in 1..=6 {
            for k in 0..=n {
                assert_eq!(k_subsets(n, k)[0], OrderedKSubset::first(n, k));
            }
        }
    }

    #[test]
    fn order_preserving_example() {
        let a = OrderedKSubset::new(5, &[2, 5]).unwrap();
        let b = OrderedKSubset::new(5, &[1, 3]).unwrap();
        let p = order_preserving(&a, &b).unwrap();
        assert_eq!(p, PartialPermutation::from_pairs(5, &[(2, 1), (5, 3)]).unwrap());
        let c = OrderedKSubset::new(5, &[1]).unwrap();
        assert!(order_preserving(&a, &c).is_err());
    }

    #[test]
    fn subset_validation() {
        assert!(OrderedKSubset::new(4, &[3, 2]).is_err());
        assert!(OrderedKSubset::new(4, &[5]).is_err());
        assert!(OrderedKSubset::new(4, &[2, 2]).is_err());
    }

    #[test]
    fn factorize_examples() {
        let id = PartialPermutation::identity(4);
        let f = factorize(&id);
        assert_eq!(f.y, PartialPermutation::identity(4));
        assert_eq!(f.ran, OrderedKSubset::first(4, 4));
        assert_eq!(f.dom, OrderedKSubset::first(4, 4));

        let s = PartialPermutation::from_pairs(4, &[(2, 1), (4, 4)]).unwrap();
        let f = factorize(&s);
        assert_eq!(f.ran.elements(), vec![1, 4]);
        assert_eq!(f.dom.elements(), vec![2, 4]);
        assert_eq!(f.y, PartialPermutation::identity(2));
        assert_eq!(f.reassemble(), s);
    }

    #[test]
    fn factorize_reassemble_exhaustive() {
        for n in 0..=4 {
            for s in enumerate(n) {
                let f = factorize(&s);
                assert!(f.y.is_total());
                assert_eq!(f.reassemble(), s);
                // the same identity through explicit p-maps
                let k = f.rank();
                let first = OrderedKSubset::first(n, k);
                let up = order_preserving(&first, &f.ran).unwrap();
                let down = order_preserving(&f.dom, &first).unwrap();
                let y_in_rn = f.y.extend_fixed(n).restrict(&first);
                assert_eq!(up * y_in_rn * down, s);
            }
        }
    }
}
