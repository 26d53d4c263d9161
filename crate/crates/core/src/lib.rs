//! Finite-dimensional set-graded Leibniz superalgebras by exact structure
//! constants: grading validation, support combinatorics, ideal machinery,
//! class decompositions and empirical simplicity checks, all over the
//! rationals or a prime field.

pub mod algebra;
pub mod corpus;
pub mod decomposer;
pub mod exactlin;
pub mod idealkit;
pub mod maxlen;
pub mod supportgraph;

pub use algebra::{Algebra, BasisElement, GradedSubspace, Label, Parity, ValidationReport};
pub use exactlin::{Field, Scalar, Subspace, Vector};
