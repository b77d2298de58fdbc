//! Harmonic analysis on the rook monoid `R_n`.
//!
//! `R_n` is the monoid of all partial permutations (injective partial maps) of
//! `{1, …, n}`. This crate provides
//!
//! - the elements themselves, their order, Möbius function and counting
//!   formulas ([`rook`]);
//! - the semigroup algebra `CR_n` in both of its natural bases, with the
//!   zeta/Möbius change of basis and both convolutions ([`algebra`]);
//! - Young's seminormal representations of `S_k` and a Clausen-style FFT on
//!   `S_k` ([`symmetric`]);
//! - two complete families of irreducible representations of `R_n`:
//!   tensor-up representations on the groupoid basis and chain-adapted
//!   tableau representations on the semigroup basis ([`reps`]);
//! - a naive transform, a block FFT through `S_k` FFTs, a recursive FFT down
//!   the chain `R_n > R_{n-1} > …`, and Fourier inversion, all with exact
//!   multiply-add counters ([`fft`]);
//! - isotypic projections and energy spectra of partially ranked data
//!   ([`spectral`]).
//!
//! Runnable walkthroughs live in `crates/core/examples/`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fft;
pub mod reps;
pub mod rook;
pub mod sparse;
pub mod spectral;
pub mod symmetric;


pub use algebra::{AlgebraElement, Basis};
pub use error::{Result, RookError};
pub use fft::{Family, FourierCoefficients, OpCounter, RookFourier};
pub use reps::{HalversonRep, RookLabel, SteinRep};
pub use rook::{OrderedKSubset, PartialPermutation};
pub use symmetric::{GroupRep, Partition, StandardTableau};

pub use num_complex::Complex64;

/// Absolute tolerance used for floating point comparisons on matrix entries.
pub const TOLERANCE: f64 = 1e-9;
