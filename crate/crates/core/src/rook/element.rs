use std::fmt;
use std::ops::Mul;

use crate::error::{Result, RookError};
use crate::rook::OrderedKSubset;

/// Largest ambient size supported by the fixed-width element encoding.
pub const MAX_N: usize = 16;

const UNDEFINED: u8 = 0;

/// An injective partial map on `{1, …, n}`.
///
/// Stored as a fixed-length image array: `image[i - 1]` is `σ(i)` (1-based), or
/// `0` when `i ∉ dom σ`. Slots past `n` are always `0`, so the derived ordering
/// and hash depend only on `(n, σ)`. The derived order is the canonical element
/// order used wherever sorted output is needed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    n: u8,
    image: [u8; MAX_N],
}

impl PartialPermutation {
    /// Builds an element from `images[i] = σ(i + 1)` (1-based values).
    pub fn new(n: usize, images: &[Option<usize>]) -> Result<Self> {
        if n > MAX_N {
            return Err(RookError::InvalidArgument(format!(
                "ambient size {n} exceeds maximum {MAX_N}"
            )));
        }
        if images.len() != n {
            return Err(RookError::Dimension(format!(
                "expected {n} images, got {}",
                images.len()
            )));
        }
        let mut image = [UNDEFINED; MAX_N];
        let mut used = 0u32;
        for (i, img) in images.iter().enumerate() {
            if let Some(v) = *img {
                if v == 0 || v > n {
                    return Err(RookError::InvalidArgument(format!(
                        "image {v} of {} is outside 1..={n}",
                        i + 1
                    )));
                }
                if used & (1 << v) != 0 {
                    return Err(RookError::InvalidArgument(format!(
                        "value {v} is hit twice; partial permutations are injective"
                    )));
                }
                used |= 1 << v;
                image[i] = v as u8;
            }
        }
        Ok(Self { n: n as u8, image })
    }

    /// Builds an element from `(x, σ(x))` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; n];
        for &(x, y) in pairs {
            if x == 0 || x > n {
                return Err(RookError::InvalidArgument(format!(
                    "domain point {x} is outside 1..={n}"
                )));
            }
            if images[x - 1].is_some() {
                return Err(RookError::InvalidArgument(format!(
                    "domain point {x} is mapped twice"
                )));
            }
            images[x - 1] = Some(y);
        }
        Self::new(n, &images)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds maximum {MAX_N}");
        let mut image = [UNDEFINED; MAX_N];
        for (i, slot) in image.iter_mut().enumerate().take(n) {
            *slot = (i + 1) as u8;
        }
        Self { n: n as u8, image }
    }

    /// The empty map.
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds maximum {MAX_N}");
        Self {
            n: n as u8,
            image: [UNDEFINED; MAX_N],
        }
    }

    /// The identity restricted to `subset`.
    pub fn idempotent_on(subset: &OrderedKSubset) -> Self {
        let mut e = Self::zero(subset.n());
        for x in subset.iter() {
            e.image[x - 1] = x as u8;
        }
        e
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `σ(x)` for a 1-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        debug_assert!(x >= 1 && x <= self.n());
        match self.image[x - 1] {
            UNDEFINED => None,
            v => Some(v as usize),
        }
    }

    pub fn images(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        (1..=self.n()).map(move |x| self.apply(x))
    }

    /// Defined `(x, σ(x))` pairs in increasing `x`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n()).filter_map(move |x| self.apply(x).map(|y| (x, y)))
    }

    pub(crate) fn domain_mask(&self) -> u32 {
        let mut m = 0;
        for i in 0..self.n() {
            if self.image[i] != UNDEFINED {
                m |= 1 << i;
            }
        }
        m
    }

    pub(crate) fn range_mask(&self) -> u32 {
        let mut m = 0;
        for i in 0..self.n() {
            if self.image[i] != UNDEFINED {
                m |= 1 << (self.image[i] - 1);
            }
        }
        m
    }

    pub fn domain(&self) -> OrderedKSubset {
        OrderedKSubset::from_mask(self.n(), self.domain_mask())
    }

    pub fn range(&self) -> OrderedKSubset {
        OrderedKSubset::from_mask(self.n(), self.range_mask())
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.image[..self.n()]
            .iter()
            .filter(|&&v| v != UNDEFINED)
            .count()
    }

    pub fn is_total(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs().all(|(x, y)| x == y)
    }

    /// `self ∘ f`: apply `f` first.
    pub fn compose(&self, f: &Self) -> Result<Self> {
        if self.n != f.n {
            return Err(RookError::Dimension(format!(
                "cannot compose elements of R_{} and R_{}",
                self.n, f.n
            )));
        }
        Ok(self.compose_unchecked(f))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, f: &Self) -> Self {
        let mut image = [UNDEFINED; MAX_N];
        for (i, slot) in image.iter_mut().enumerate().take(self.n()) {
            let mid = f.image[i];
            if mid != UNDEFINED {
                *slot = self.image[mid as usize - 1];
            }
        }
        Self { n: self.n, image }
    }

    /// The unique semigroup inverse: `dom σ⁻¹ = ran σ`.
    pub fn inverse(&self) -> Self {
        let mut image = [UNDEFINED; MAX_N];
        for i in 0..self.n() {
            let v = self.image[i];
            if v != UNDEFINED {
                image[v as usize - 1] = (i + 1) as u8;
            }
        }
        Self { n: self.n, image }
    }

    /// Natural partial order: `self` is a restriction of `t`.
    pub fn leq(&self, t: &Self) -> bool {
        self.n == t.n
            && (0..self.n()).all(|i| self.image[i] == UNDEFINED || self.image[i] == t.image[i])
    }

    /// All restrictions of `self` (every `s ≤ self`), `2^rank` of them.
    pub fn restrictions(&self) -> impl Iterator<Item = Self> + '_ {
        let dom: Vec<usize> = (0..self.n())
            .filter(|&i| self.image[i] != UNDEFINED)
            .collect();
        let count = 1u32 << dom.len();
        (0..count).map(move |bits| {
            let mut image = [UNDEFINED; MAX_N];
            for (j, &i) in dom.iter().enumerate() {
                if bits & (1 << j) != 0 {
                    image[i] = self.image[i];
                }
            }
            Self { n: self.n, image }
        })
    }

    /// Restriction of `self` to `subset ∩ dom σ`.
    pub fn restrict(&self, subset: &OrderedKSubset) -> Self {
        let mut out = *self;
        for i in 0..self.n() {
            if subset.mask() & (1 << i) == 0 {
                out.image[i] = UNDEFINED;
            }
        }
        out
    }

    /// Embeds into `R_m` (`m ≥ n`), fixing the points `n+1, …, m`.
    pub fn extend_fixed(&self, m: usize) -> Self {
        assert!(m >= self.n() && m <= MAX_N);
        let mut out = *self;
        for i in self.n()..m {
            out.image[i] = (i + 1) as u8;
        }
        out.n = m as u8;
        out
    }

    /// Inverse of [`extend_fixed`](Self::extend_fixed): drops the points above
    /// `m`, which must be fixed by `self`.
    pub fn restrict_fixed(&self, m: usize) -> Result<Self> {
        if m > self.n() {
            return Err(RookError::Dimension(format!("{m} > {}", self.n())));
        }
        for i in m..self.n() {
            if self.image[i] as usize != i + 1 {
                return Err(RookError::InvalidArgument(format!(
                    "{self} does not fix {}",
                    i + 1
                )));
            }
        }
        let mut out = *self;
        for i in m..MAX_N {
            out.image[i] = UNDEFINED;
        }
        out.n = m as u8;
        Ok(out)
    }

    /// Sets `σ(x) = y` or clears it, without injectivity checks.
    pub(crate) fn with_image(mut self, x: usize, y: Option<usize>) -> Self {
        self.image[x - 1] = y.map_or(UNDEFINED, |v| v as u8);
        self
    }

    /// The 0/1 rook matrix with `M[σ(j)][j] = 1`.
    pub fn rook_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n()]; self.n()];
        for (x, y) in self.pairs() {
            m[y - 1][x - 1] = 1;
        }
        m
    }
}

impl Mul for PartialPermutation {
    type Output = PartialPermutation;

    /// `g * f = g ∘ f`. Panics when the ambient sizes differ.
    fn mul(self, f: Self) -> Self {
        assert_eq!(self.n, f.n, "cannot compose elements of different R_n");
        self.compose_unchecked(&f)
    }
}

/// `g ∘ f`.
pub fn compose(g: &PartialPermutation, f: &PartialPermutation) -> Result<PartialPermutation> {
    g.compose(f)
}

/// Möbius function of the natural order: `(-1)^(rk t - rk s)` when `s ≤ t`.
pub fn mobius(s: &PartialPermutation, t: &PartialPermutation) -> i64 {
    if !s.leq(t) {
        return 0;
    }
    if (t.rank() - s.rank()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::rook::notation::print_flat(self))
    }
}

impl fmt::Debug for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}[{}]", self.n, crate::rook::notation::print_flat(self))
    }
}
