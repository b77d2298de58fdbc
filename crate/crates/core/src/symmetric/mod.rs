//! Young's seminormal representations of `S_k` and a Clausen-style FFT.
//!
//! Permutations are total elements of `R_k`. Representations are adapted to
//! the chain `S_k > S_{k-1} > … > S_1`: restricted to `S_{k-1}` (the
//! permutations fixing `k`), `ρ_λ` is literally block diagonal with blocks
//! `ρ_μ` for `μ = λ` minus a corner, corners taken top to bottom.

mod partition;
mod seminormal;
mod sn_fft;
mod tableau;

pub use partition::{partitions_of, Partition};
pub use seminormal::{restrict_sn, seminormal_rep, GroupRep};
pub use sn_fft::{clausen_bound, coset_order, sn_fft, sn_ifft, sn_naive, LabelledSnBlocks, SnBlocks, SnFft};
pub use tableau::{n_standard_tableaux, standard_tableaux, transposition_action, StandardTableau};
pub(crate) use tableau::index_of;
