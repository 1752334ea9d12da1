//! Dense linear algebra over a field: exact rationals (`BigRational`),
//! doubles, and complex doubles.
//!
//! Rank decisions use complete pivoting with a relative tolerance; the
//! exact backend requires the tolerance to be zero.

mod elim;
mod matrix;
mod scalar;

pub use elim::{
    check_eps, det, independent_columns_in_order, inverse, kernel_basis, pivot_columns, rank_eps, reduce, solve,
    Reduced, DEFAULT_EPS,
};
pub use matrix::Matrix;
pub use num_complex::Complex64;
pub use scalar::{rat, Rational, RealScalar, Scalar};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum MatrixError {
    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    Shape { expected: (usize, usize), got: (usize, usize) },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("tolerance {0} must be zero on the exact backend")]
    ExactTolerance(f64),
    #[error("tolerance {0} must be non-negative")]
    NegativeTolerance(f64),
    #[error("linear system is inconsistent (residual {0:e})")]
    Inconsistent(f64),
    #[error("matrix is singular")]
    Singular,
}
