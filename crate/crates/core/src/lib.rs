//! Concatenated sum-rank codes.
//!
//! Finite-field towers, dense linear algebra, Hamming/rank/sum-rank metrics
//! with exhaustive minimum-distance oracles, explicit code constructions
//! (Reed–Solomon, Gabidulin, sum-to-zero, concatenation) and closed-form
//! evaluation of the rate/distance bounds used to compare them.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod error;
pub mod field;
pub mod matrix;
pub mod metrics;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use matrix::Mat;
