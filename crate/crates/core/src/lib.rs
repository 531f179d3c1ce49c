//! Spectra of subdivision-vertex and subdivision-edge joins.
//!
//! Given a regular graph `G1` and an arbitrary graph `G2`, the
//! subdivision-vertex join subdivides every edge of `G1` and connects every
//! original vertex of `G1` to every vertex of `G2`; the subdivision-edge join
//! connects the inserted vertices instead. The adjacency, Laplacian and
//! signless-Laplacian spectra of both joins factor in closed form through the
//! spectra of `G1` and `G2` and the coronal of `G2`'s matrix, which also
//! yields spanning-tree counts and Kirchhoff indices.
//!
//! This crate implements:
//!
//! * the graph constructions themselves ([`graph`]),
//! * the dense linear-algebra substrate: symmetric eigendecomposition,
//!   polynomial arithmetic, coronals, and exact integer determinants
//!   ([`linalg`]),
//! * every closed-form spectrum, spanning-tree and Kirchhoff formula
//!   ([`closed_form`]),
//! * independent oracles (direct eigendecomposition, exact Matrix-Tree
//!   counts, direct Kirchhoff sums) and a verification harness that checks
//!   each formula against them over a corpus grid ([`verify`]),
//! * construction and certification of cospectral graph pairs
//!   ([`cospectral`]).
//!
//! The verification grid and family enumeration are data-parallel. The
//! default `parallel` feature runs them on a rayon pool; disabling it
//! falls back to sequential execution with identical output.

pub mod closed_form;
pub mod cospectral;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, JoinKind, JoinLayout, MatrixKind, RegularGraph};
pub use linalg::Spectrum;
