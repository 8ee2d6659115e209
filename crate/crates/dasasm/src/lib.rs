//! Odd diagonally and antidiagonally symmetric alternating sign matrices,
//! alternating sign triangles, and the triangular six-vertex model.
//!
//! Everything is exact: rationals, or the cyclotomic field Q(ζ₁₂) when the
//! crossing parameter sits at the combinatorial point q = e^{iπ/6}.

pub mod characters;
pub mod checks;
pub mod error;
pub mod exact_arith;
pub mod formulas;
pub mod matchings;
pub mod objects;
pub mod report;
pub mod statistics;
pub mod vertex_model;

pub use error::{Error, Result};
