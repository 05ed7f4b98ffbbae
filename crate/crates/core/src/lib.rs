//! Strongly regular configurations.
//!
//! A symmetric configuration `(v_k)` has `v` points and `v` lines, `k` points
//! on every line, `k` lines through every point and at most one line through
//! any two points. It is *strongly regular* with parameters `(v_k; λ, μ)` when
//! its collinearity graph is `SRG(v, k(k-1), λ, μ)`.
//!
//! The crate is organised by subsystem:
//!
//! - [`algebra`]: finite fields, projective subspaces, finite groups.
//! - [`graphs`]: graphs, strong regularity, generators, cliques, graph6.
//! - [`incidence`]: the [`Configuration`] type and its invariants.
//! - [`feasibility`]: parameter arithmetic and the feasibility table.
//! - [`constructions`]: projective planes, triangle removal, Moore graphs,
//!   `LP(4,q)` with polarity transformations, group developments.
//! - [`sdds`]: strong deficient difference sets.
//! - [`classify`]: configurations on a given point graph, up to isomorphism.
//! - [`iso`]: canonical forms, automorphism group orders, self-duality.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod classify;
pub mod constructions;
mod error;
pub mod feasibility;
pub mod graphs;
pub mod incidence;
pub mod iso;
pub mod sdds;

pub use algebra::{FiniteField, Group, GroupSpec, Subspace};
pub use error::{Error, Result};
pub use graphs::{Graph, GraphSpec, SrgParams};
pub use incidence::{Configuration, GeometryClass, GeometryKind, Side, SrcParams};
pub use iso::CanonicalForm;
