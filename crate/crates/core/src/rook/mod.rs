//! Elements of the rook monoid `R_n` and their combinatorics.

mod count;
mod element;
pub mod notation;
mod subset;
pub mod word;

pub use count::{
    binomial, enumerate, factorial, permutations, size, size_recursive, zeta_ones_by_columns,
    zeta_ones_by_rows, Enumeration,
};
pub use element::{compose, mobius, PartialPermutation, MAX_N};
pub use notation::{parse_cycle_link, parse_flat, print_cycle_link, print_flat};
pub use subset::{
    embed_through, factorize, k_subsets, order_preserving, CanonicalFactorization, OrderedKSubset,
};
pub use word::{
    evaluate_word, generator_word, left_coset_rep, link, right_coset_rep, split_type, transposition,
    Generator, SplitType,
};
