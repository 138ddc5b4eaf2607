//! p-numerical semigroups: sets of integers with more than `p`
//! representations by a generator list, with exact invariants, symmetry
//! classification, identity verifiers and Arf checks.

pub mod arf;
pub mod cli;
pub mod config;
pub mod denumerant;
pub mod error;
pub mod exactmath;
pub mod generators;
pub mod identities;
pub mod psemigroup;
pub mod symmetry;

pub use config::Limits;
pub use error::{Error, Result};
pub use generators::GeneratorSet;
pub use psemigroup::PSemigroup;
