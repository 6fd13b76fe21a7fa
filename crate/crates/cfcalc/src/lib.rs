//! Euler calculus on finite simplicial complexes.
//!
//! The crate implements the ring of integer constructible functions on a
//! finite simplicial complex together with its topological operators — the
//! link and duality operators, their halves on Euler functions, links along
//! closed subsets, pullback and proper pushforward along simplicial maps —
//! and the decision procedures built on them: Euler and completely-Euler
//! tests in dimensions up to three, the Akbulut-King epsilon invariants and
//! characteristic sets of the one-skeleton, a stratified variant, and
//! iterated-link two-adic divisibility diagnostics.
//!
//! All arithmetic is exact 64-bit integer arithmetic with overflow
//! detection. Every value is immutable after construction and every
//! operation is a pure function.

pub mod ak;
pub mod cf;
pub mod complex;
mod error;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod maps;
pub mod ops;
pub mod selftest;

pub use cf::ConstructibleFunction;
pub use complex::{Complex, SimplexSet, SimplicialComplex, Stratification, Stratum};
pub use error::{Error, Result};
pub use maps::SimplicialMap;
