//! Surface-group machinery: the map `Υ` and its twist `κ`, the cup-product
//! pairing on `H^1_ρ(Σ; sl_2)`, symplectic bases, and the refined torsion of
//! a closed surface with respect to such a basis.

mod basis;
mod pairing;
mod surface;
mod targets;
mod tensor;
mod torsion;

pub use basis::{
    gram_matrix, surface_complex, symplectic_basis, symplectic_basis_for, symplectic_basis_seeded, symplectic_gram_schmidt,
    symplectic_residual, DEGENERACY_TOL,
};
pub use pairing::{cup_pairing, explicit_pairing, CupForm};
pub use surface::{a, b, commutator, SurfaceData};
pub use targets::{default_sl2r_pair, doubled_rep, hyperbolic_power, su2_f0};
pub use tensor::{kappa, upsilon, TensorChain};
pub use torsion::{predicted_surface_torsion, surface_refined_torsion, surface_refined_torsion_seeded,
    surface_refined_torsion_with_trace_factor, SurfaceTorsion,
};

use fox_words::FoxError;
use local_systems::LocalError;
use scalar_matrix::MatrixError;
use sl2_reps::RepError;
use torsion_core::TorsionError;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SymplecticError {
    #[error("surface genus must be at least 2, got {0}")]
    Genus(usize),
    #[error("generator x{gen} is not one of the {gens} surface generators")]
    ForeignGenerator { gen: usize, gens: usize },
    #[error("expected size {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("input is not a cocycle (residual {residual:e})")]
    NotACocycle { residual: f64 },
    #[error("cup pairing is degenerate on the remaining {remaining} vectors")]
    Degenerate { remaining: usize },
    #[error("representation is not irreducible: cohomology dimensions ({h0}, {h1}, {h2})")]
    Reducible { h0: usize, h1: usize, h2: usize },
    #[error("cannot build the representation: {0}")]
    Construction(String),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
