use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RookError};
use crate::rook::binomial;
use crate::symmetric::{partitions_of, Partition};

/// Index of an irreducible representation of `R_n`: a partition `λ ⊢ k ≤ n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabel", into = "RawLabel")]
pub struct RookLabel {
    lambda: Partition,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct RawLabel {
    lambda: Vec<usize>,
    n: usize,
}

impl TryFrom<RawLabel> for RookLabel {
    type Error = RookError;

    fn try_from(raw: RawLabel) -> Result<Self> {
        RookLabel::new(Partition::new(&raw.lambda)?, raw.n)
    }
}

impl From<RookLabel> for RawLabel {
    fn from(l: RookLabel) -> Self {
        RawLabel {
            lambda: l.lambda.parts().to_vec(),
            n: l.n,
        }
    }
}

impl RookLabel {
    pub fn new(lambda: Partition, n: usize) -> Result<Self> {
        if lambda.weight() > n {
            return Err(RookError::InvalidArgument(format!(
                "label {lambda} has weight above {n}"
            )));
        }
        Ok(Self { lambda, n })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The weight `k = |λ|`.
    pub fn k(&self) -> usize {
        self.lambda.weight()
    }

    /// `C(n,k)·f^λ`.
    pub fn dim(&self) -> usize {
        (binomial(self.n, self.k()) * self.lambda.hook_dimension()) as usize
    }
}

impl fmt::Display for RookLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lambda.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", self.lambda)
        }
    }
}

impl fmt::Debug for RookLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.n)
    }
}

/// Every label for `R_n`: weights ascending, partitions of each weight in
/// reverse-lexicographic order.
pub fn labels(n: usize) -> Vec<RookLabel> {
    (0..=n)
        .flat_map(|k| partitions_of(k).into_iter().map(move |lambda| RookLabel { lambda, n }))
        .collect()
}
