//! Exact symbolic computation in free products of groups.
//!
//! The crate works with reduced words over an ordered family of factor
//! groups: normal forms, the word length function, cyclic decomposition and
//! powering, classification of words by how their powers grow, a
//! pattern matcher with brute-force oracle for products of two conjugates of
//! letters, exhaustive verification suites, and a simulator for truncated
//! nested-power sequences whose lengths diverge.

pub mod classify;
pub mod dudley;
pub mod error;
pub mod expr;
pub mod group;
pub mod oracle;
pub mod word;

pub use classify::{classify, match_sc_squared, Classification, ScSquaredWitness, WitnessForm};
pub use error::{Error, Violation};
pub use expr::{format_word, parse_word};
pub use group::{Factor, GroupSpec, Letter, Order, RawFactor, RawGroupSpec};
pub use oracle::{ball, enumerate_words, EnumBounds, LemmaId, LemmaReport};
pub use word::{concat, inverse, power, reduce, CyclicDecomposition, TypeTag, Word};
