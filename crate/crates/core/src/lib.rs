//! Differentiation matrices for polynomial bases.
//!
//! Every constructor follows the same orientation: if `a` holds the
//! coefficients of `p` in a basis `φ`, then `D·a` holds the coefficients of
//! `p′` in the same basis, so column `k` of `D` is the expansion of `φ_k′`.

pub mod basis;
pub mod bernstein;
pub mod cli;
pub mod degree_graded;
pub mod dynamic;
pub mod error;
pub mod experiment;
pub mod field;
pub mod hermite;
pub mod lagrange;
pub mod matrix;
pub mod series;
pub mod structure;
pub mod verify;

pub use basis::{BasisKind, BasisSpec, NodeSet, RecurrenceSpec};
pub use error::{Error, Result};
pub use field::{Complex, Field, FieldTag, Rational, Scalar};
pub use matrix::Matrix;
