//! Torsion of based cochain complexes.
//!
//! Complexes are cochain complexes `C^0 -> ... -> C^m` over a field. Torsion
//! uses the convention where even degrees contribute to the numerator. The
//! refined torsion multiplies by the sign of the untwisted real torsion and
//! the parity `N(X)`; Milnor's multiplicativity is checked with an explicit
//! sign exponent.

mod complex;
mod milnor;
mod torsion;

pub use complex::BasedComplex;
pub use milnor::{close, les_torsion_and_eta, MilnorReport, ShortExact};
pub use torsion::{
    compute_torsion, compute_torsion_with_pivots, n_parity, real_sign, rebase_torsion, refined_torsion,
    refined_torsion_with_parity, unit_columns, BasisChange,
};

use scalar_matrix::MatrixError;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TorsionError {
    #[error("{dims} degrees but {maps} entries supplied")]
    Length { dims: usize, maps: usize },
    #[error("coboundary {degree} has shape {got:?}, expected {expected:?}")]
    MapShape { degree: usize, expected: (usize, usize), got: (usize, usize) },
    #[error("cohomology vectors in degree {degree} have the wrong length")]
    CohomologyDims { degree: usize },
    #[error("not a complex: composite at degree {degree} has residual {residual:e}")]
    NotAComplex { degree: usize, residual: f64 },
    #[error("degree {degree} has {dim}-dimensional cohomology but no basis was supplied")]
    NotAcyclic { degree: usize, dim: usize },
    #[error("degree {degree}: expected {expected} cohomology vectors, got {got}")]
    CohomologyCount { degree: usize, expected: usize, got: usize },
    #[error("cohomology vector in degree {degree} is not a cocycle (residual {residual:e})")]
    NotCocycle { degree: usize, residual: f64 },
    #[error("basis in degree {degree} is degenerate")]
    DegenerateBasis { degree: usize },
    #[error("pivot sets do not match the coboundary ranks")]
    BadPivots,
    #[error("change of basis in degree {degree} is singular")]
    SingularChange { degree: usize },
    #[error("real and twisted complexes have incompatible cells: {real:?} vs {twisted:?}")]
    CellMismatch { real: Vec<usize>, twisted: Vec<usize> },
    #[error("sequence is not short exact in degree {degree}")]
    NotExact { degree: usize },
    #[error("maps do not commute with the coboundaries in degree {degree}")]
    NotChainMap { degree: usize },
    #[error("distinguished bases in degree {degree} have determinant {value}, not 1")]
    BasisDeterminant { degree: usize, value: f64 },
    #[error("vector in degree {degree} does not lie in the span of the cohomology basis and coboundaries")]
    NotACocycleClass { degree: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
