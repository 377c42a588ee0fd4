//! Exact algorithms for braid groups and their lifts to cyclic branched
//! covers of the disk.
//!
//! * [`braid`]: braid words, permutations, exponent sums.
//! * [`garside`]: left normal forms, word problem, positivity, periodicity,
//!   periodic roots, conjugacy.
//! * [`qp`]: quasipositivity certificates and obstructions.
//! * [`cabling`]: tubular braids, cabling and regular forms of reducible braids.
//! * [`cover`]: the lift of `B_n` to the `k`-fold cyclic branched cover and its
//!   integral homology representation, with a Burau cross-check.

pub mod braid;
pub mod cabling;
pub mod cover;
pub mod error;
pub mod garside;
pub mod qp;
pub mod sample;

pub use braid::{ArtinLetter, BraidWord, Permutation};
pub use error::{Error, Result};
pub use garside::NormalForm;
