//! Exact arithmetic of pure quintic fields `Q(D^(1/5))` and their pure
//! metacyclic normal closures: radicand normalization, conductors and
//! discriminants, multiplicities, admissible differential principal
//! factorization types, the Polya property and class number relations,
//! checked against an embedded catalog.

pub mod algebra;
pub mod arith;
pub mod cli;
pub mod dataset;
pub mod dpf;
pub mod error;
pub mod invariants;
pub mod multiplicity;
pub mod radicand;
pub mod relations;
pub mod verify;

pub use error::{Error, Result};
