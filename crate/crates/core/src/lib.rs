//! Exact coarse flag Hilbert–Poincaré numerators of matroids, tope
//! h-vector decompositions of oriented matroids, and the bounds relating
//! them.
//!
//! Arithmetic is exact throughout. Floating point is never used.

pub mod corpus;
pub mod criteria;
pub mod error;
pub mod exactpoly;
pub mod linalg;
pub mod matroid;
pub mod oriented;
pub mod series;

pub use error::{Error, Result};
