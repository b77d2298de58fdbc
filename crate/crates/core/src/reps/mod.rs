//! The two complete families of irreducible representations of `R_n`.
//!
//! Both are indexed by [`RookLabel`]s `λ ⊢ k`, `0 ≤ k ≤ n`, and have
//! dimension `C(n,k)·f^λ`.

mod halverson;
mod label;
mod stein;

pub use halverson::{branch_rn, HalversonRep};
pub use label::{labels, RookLabel};
pub use stein::SteinRep;
