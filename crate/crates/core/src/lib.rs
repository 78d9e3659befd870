//! Free short-circuit logic: evaluation trees, normal forms, the
//! decomposition-based inverse of evaluation, conditional basic forms and
//! finite independence models.

pub mod cp;
pub mod decompose;
pub mod error;
pub mod evaltree;
pub mod fuzz;
pub mod gen;
pub mod inverse;
pub mod models;
pub mod normalize;
pub mod syntax;

pub use error::{Error, Result};
pub use evaltree::{se, EvalTree, HoleTree};
pub use normalize::{classify, decide_eq, nf, Engine, SnfClass};
pub use syntax::{parse, Mode, Term};
