//! Metric-span and Remez-type bound machinery for finite point sets.
//!
//! The crate computes covering numbers of finite sets by `l∞` cubes, the
//! metric d-span invariant built on them, Chebyshev-based extension bounds
//! for polynomials known on a discrete set, an exact linear-programming
//! oracle for the discrete Remez span, and spanning-tree spread criteria.

pub mod covering;
pub mod error;
pub mod pointset;
pub mod poly;
pub mod polywitness;
pub mod remez;
mod simplex;
pub mod span;
pub mod spread;

pub use error::{Error, Result};
pub use pointset::{BoundingBox, Metric, PointSet};
