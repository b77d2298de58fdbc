//! Fourier transforms on `CR_n` with exact multiply-add counting.
//!
//! Three forward transforms are provided:
//!
//! - [`RookFourier::naive`], the defining sum, used as an oracle;
//! - [`RookFourier::stein_fft`], which splits a groupoid-basis function into
//!   `C(n,k)²` functions on `S_k` and runs a Clausen FFT on each;
//! - [`RookFourier::recursive_fft`], which works on the semigroup basis and
//!   recurses down `R_n > R_{n-1} > …` through `2n` subtransforms.
//!
//! [`RookFourier::invert`] recovers groupoid coordinates from either family.

mod bounds;
mod coefficients;
mod plan;

use std::fmt;
use std::ops::AddAssign;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::RookError;

pub use bounds::{
    naive_bound, recursive_bound, recursive_closed_bound, stein_bound, stein_semigroup_bound,
    zeta_bound,
};
pub use coefficients::{BoundCheck, FourierCoefficients};
pub use plan::{
    fourier_invert, naive_transform, recursive_fft, stein_fft, stein_fft_semigroup, RookFourier,
};

/// Counts complex multiply-adds: one multiplication followed by one addition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OpCounter {
    pub multiply_adds: u64,
}

impl OpCounter {
    pub fn add(&mut self, ops: u64) {
        self.multiply_adds += ops;
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.multiply_adds += rhs.multiply_adds;
    }
}

/// Which complete set of irreducible representations a transform uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Tensor-up representations, paired with the groupoid basis.
    Stein,
    /// Chain-adapted tableau representations, paired with the semigroup basis.
    Halverson,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Stein => "stein",
            Family::Halverson => "halverson",
        })
    }
}

impl FromStr for Family {
    type Err = RookError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "stein" => Ok(Family::Stein),
            "halverson" => Ok(Family::Halverson),
            other => Err(RookError::Parse(format!("unknown family '{other}'"))),
        }
    }
}
