//! Exact computation of plethysm coefficients of Schur functions.
//!
//! The crate computes Schur expansions of `s_nu ∘ s_mu` by a recursion along
//! the lexicographic order that repeatedly cancels plethystic-tableau counts
//! against Kostka numbers, validates everything against an independent
//! power-sum/character oracle, implements the Carré–Leclerc domino rule for
//! the degree-two cases, and decides whether a product is multiplicity-free,
//! producing replayable witness certificates when it is not.

pub mod classifier;
pub mod domino;
pub mod engine;
mod error;
pub mod msym;
pub mod near_maximal;
pub mod oracle;
pub mod output;
pub mod partition;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::Partition;
