//! Exact linear algebra over prime fields and the rationals.
//!
//! Dense matrices are the reference implementation; the sparse column
//! representation is used for cube-sized differentials and quotients.

mod field;
mod matrix;
mod sparse;

pub use field::{is_prime, Field, FieldSpec, Fp, Rationals};
pub use matrix::{image_membership_rank, Matrix};
pub use sparse::{axpy, normalize, Quotient, SparseMatrix, SparseVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("characteristic {0} is neither 0 nor a supported prime")]
    InvalidCharacteristic(u64),
    #[error("cannot read scalar from {0}")]
    BadScalar(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
