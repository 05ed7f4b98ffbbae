//! Finite fields, projective geometry over them, and finite groups.

mod field;
mod group;
pub mod projective;

pub use field::{prime_power, FiniteField, MAX_FIELD_ORDER};
pub use group::{Group, GroupSpec, ASSOCIATIVITY_CHECK_LIMIT};
pub use projective::{gaussian_binomial, pg_subspaces, subspace_contains, Subspace};
