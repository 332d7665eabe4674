//! Exact arithmetic for cohomological local multiplicity criteria.
//!
//! * [`fpring`]: prime fields, truncated graded rings and their tensor products.
//! * [`manifolds`]: built-in manifolds, total classes and custom specifications.
//! * [`criteria`]: determinant classes, the criterion search and fast paths.
//! * [`symfun`]: Schur functions, the dual Cauchy identity and the Chern
//!   Euler class cross-check.

pub mod criteria;
pub mod error;
pub mod fpring;
pub mod manifolds;
pub mod symfun;

pub use error::{Error, Result};
