//! Maximal comma-free codes of odd length over ordered alphabets.
//!
//! Two constructions are provided and cross-checked against each other:
//! Eastman's dip/superdip rotation ([`eastman`]) and Lazard elimination
//! under a chosen word order ([`lazard`], [`order`]). [`melancon`] finds the
//! Lazard-set conjugate of a word without running the elimination, and
//! [`verify`] holds the independent property checkers.

pub mod dips;
pub mod eastman;
pub mod error;
pub mod lazard;
pub mod melancon;
pub mod order;
pub mod verify;
pub mod words;

pub use dips::{classify, index, SigmaClassification};
pub use eastman::{eastman_code, eastman_rotate, RotationTrace};
pub use error::{Error, Result};
pub use lazard::{eliminate, EliminationTrace, HallTree};
pub use melancon::{melancon_rotate, MergeSequence};
pub use order::{EastmanOrder, LexOrder, OrderKind, ScholtzOrder, WordOrder};
pub use words::{compare_radix, lyndon_words, necklace_count, Alphabet, Word};
