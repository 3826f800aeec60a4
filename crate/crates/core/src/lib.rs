//! Combinatorics of the initial complex attached to first-order jets over
//! the rank-at-most-one determinantal variety of an m x n matrix.
//!
//! The complex lives on the 2mn vertices x[i,j], y[i,j]. The crate
//! generates the squarefree monomial ideal cutting it out, enumerates its
//! facets both by brute force and through their lattice-path structure,
//! counts them exactly, and certifies shellability of a canonical facet
//! order.

pub mod count;
pub mod error;
pub mod export;
pub mod facet;
pub mod grid;
pub mod ideal;
pub mod oracle;
pub mod shelling;

pub use error::{Error, Result};
pub use grid::{Cell, GridShape, LatticePath, Layer, Region, Vertex};
