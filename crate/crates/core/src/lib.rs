//! Exact algebra of words and phrases: cut and inscription coproducts,
//! their pre-Lie parts, antipodes, indicator actions and dual products,
//! together with executable law checkers.

mod cache;
pub mod cuts;
pub mod dual;
pub mod element;
pub mod error;
pub mod indicators;
pub mod laws;
pub mod inscriptions;
pub mod json;
pub mod ring;
pub mod samples;
pub mod stable;
pub mod trees;
pub mod words;

pub use element::{tensor2, tensor3, Basis, MapLetters, ModuleElement, Monoid, Tensor, Tensor3};
pub use error::{Error, Result};
pub use ring::{Coefficient, RingMode};
pub use stable::{verify_stability, verify_strong_stability, StableSet, StronglyStableSet};
pub use words::{Alphabet, Letter, LetterMap, Phrase, Word};
