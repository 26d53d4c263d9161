//! Batch interface for the set-graded Leibniz superalgebra toolkit:
//! algebra files in and out, analysis reports in human or machine form.

pub mod commands;
pub mod format;

pub use commands::{Outcome, SimplicityMode};
pub use format::AlgebraFile;
