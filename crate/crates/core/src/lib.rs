//! Exact checks for clutters (square-free monomial ideals).

pub mod clutter;
pub mod cm;
pub mod covering;
pub mod error;
pub mod harness;
pub mod polyhedra;
pub mod rees;
pub mod transform;

pub use clutter::{parse_clutter, Clutter, ExponentVector, IncidenceMatrix, VertexSet};
pub use error::{Error, Result};
