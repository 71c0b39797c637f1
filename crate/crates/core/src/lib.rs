//! Graph minor category, graph complexes, and exact homology.
//!
//! This crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`graph`]: multigraphs with arrows and an orientation-reversing involution,
//!   standard families, line graphs and their complements.
//! * [`minors`]: minor morphisms, their validation, composition and exhaustive
//!   enumeration.
//! * [`complex`]: matching, d-matching, monotone-property and line-graph flag
//!   complexes, restrictions and induced simplicial maps.
//! * [`linalg`] and [`homology`]: sparse exact Smith normal form, field
//!   elimination, simplicial (co)homology with torsion and induced maps.
//! * [`commalg`]: edge ideals of complement line graphs, Hochster and Koszul
//!   Betti numbers.
//! * [`arrangement`]: chromatic polynomials and cohomology of graphical
//!   arrangement complements.
//! * [`families`]: graph enumeration and the scan harnesses.
//! * [`checks`]: invariant checks over graph corpora.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod canon;
pub mod checks;
pub mod commalg;
pub mod complex;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod minors;
pub mod util;

pub use error::{Error, Result};
pub use graph::{Graph, SimpleGraph, StandardGraph};
pub use minors::MinorMorphism;
