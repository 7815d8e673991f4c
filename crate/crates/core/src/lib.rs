//! b-vectors, threshold structure, connectivity and Stanley–Reisner Betti
//! numbers of chordal graphs.
//!
//! Vertices are `0..n`. Counts that can grow (clique counts, b-vector
//! entries, Betti numbers, cut-component sums) are arbitrary-precision
//! integers.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod claims;
pub mod cliques;
pub mod complex;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod peo;
pub mod shifting;
pub mod subsets;
pub mod threshold;
pub mod vectors;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use peo::Peo;
pub use threshold::SdWord;
pub use vectors::{BVector, CVector, FVector, HVector};
pub use vertex_set::VertexSet;
