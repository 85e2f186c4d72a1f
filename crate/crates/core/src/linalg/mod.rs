//! Exact linear algebra over GF(p) and ℚ.

mod echelon;
mod field;
mod matrix;
mod system;

pub use echelon::{has_full_column_rank, kernel, quotient, rank, rref, solve, EchelonForm};
pub use field::{FieldSpec, Scalar, MAX_PRIME};
pub use matrix::Matrix;
pub use system::{BlockId, LinearSystem, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("characteristic {0} is neither 0 nor an admissible prime")]
    BadCharacteristic(u64),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("shape mismatch in {context}: {left:?} vs {right:?}")]
    ShapeMismatch {
        context: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse matrix entry {0}")]
    BadEntry(String),
    #[error("empty input to {0}")]
    Empty(&'static str),
}
