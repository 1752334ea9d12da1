//! Representations of presented groups into `SL_2(R)` (and `SU(2)` as complex
//! 2x2 matrices): relator checks, the adjoint action on `sl_2`, the Killing
//! form, Möbius action on the projective line and a Zariski-density test.

mod adjoint;
mod density;
mod mat2;
mod point;
mod rep;

pub use adjoint::{adjoint_matrix, from_sl2_coords, killing_form, killing_gram, sl2_basis, sl2_coords};
pub use density::{density_report, zariski_dense_check, DensityReport};
pub use mat2::Mat2;
pub use point::{mobius_act, mobius_infinity, mobius_point, ProjPoint};
pub use rep::{verify_relators, Flavor, Rep};

pub use scalar_matrix::Complex64;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RepError {
    #[error("generator x{gen} has no image ({gens} images given)")]
    UnknownGenerator { gen: usize, gens: usize },
    #[error("presentation has {expected} generators but {got} images were given")]
    GeneratorCount { expected: usize, got: usize },
    #[error("matrix is not traceless (trace {0:e})")]
    NotTraceless(f64),
    #[error("image of x{gen} has determinant {det}, expected 1")]
    Determinant { gen: usize, det: f64 },
    #[error("invalid representation JSON: {0}")]
    Json(String),
}
