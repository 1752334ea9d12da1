use scalar_matrix::Scalar;
use sl2_reps::Rep;
use torsion_core::{compute_torsion, n_parity, real_sign};

use crate::basis::{gram_matrix, surface_complex, symplectic_gram_schmidt, symplectic_residual};
use crate::{symplectic_basis_for, CupForm, SurfaceData, SymplecticError};

/// The value `1/2^{g-1}` predicted for the surface torsion.
pub fn predicted_surface_torsion(genus: usize) -> f64 {
    0.5f64.powi(genus as i32 - 1)
}

/// Refined torsion of a surface at a representation together with the data
/// needed to judge its normalisation.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceTorsion<S> {
    pub genus: usize,
    /// `τ⁰_ρ(Σ, h_sym)` with the Killing form `4 tr(XY)`.
    pub value: S,
    /// Sign of the real torsion (with `N(Σ)`), already included in `value`.
    pub real_sign: i8,
    /// `|G - J|` for the symplectic basis that was used.
    pub gram_residual: f64,
}

impl<S: Scalar + Copy> SurfaceTorsion<S> {
    /// Factor by which `value` exceeds `1/2^{g-1}` (in magnitude). A
    /// normalisation mismatch of the invariant form shows up here as one
    /// constant shared by all representations.
    pub fn calibration_factor(&self) -> f64 {
        self.value.magnitude() / predicted_surface_torsion(self.genus)
    }
}

/// `τ⁰_ρ(Σ, h_sym)`: the adjoint torsion with a symplectic basis of `H^1`,
/// signed by the real torsion computed with a symplectic basis of
/// `H^1(Σ; R)` and the unit classes in degrees 0 and 2.
pub fn surface_refined_torsion<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    eps: f64,
) -> Result<SurfaceTorsion<S>, SymplecticError> {
    surface_refined_torsion_seeded(rho, sd, None, eps)
}

pub fn surface_refined_torsion_seeded<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    seed: Option<u64>,
    eps: f64,
) -> Result<SurfaceTorsion<S>, SymplecticError> {
    surface_refined_torsion_with_trace_factor(rho, sd, 4, seed, eps)
}

/// Surface torsion with the invariant form `k tr(XY)` on `sl_2`; `k = 4` is
/// the Killing form used everywhere else.
pub fn surface_refined_torsion_with_trace_factor<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    k: i64,
    seed: Option<u64>,
    eps: f64,
) -> Result<SurfaceTorsion<S>, SymplecticError> {
    let form = CupForm::adjoint_with_trace_factor(rho, sd, k)?;
    let hs = symplectic_basis_for(&form, rho, sd, seed, eps)?;
    let gram_residual = symplectic_residual(&gram_matrix(&form, &hs)?);
    let twisted = surface_complex(rho, sd, eps)?.with_cohomology(vec![Vec::new(), hs, Vec::new()])?;
    let t = compute_torsion(&twisted, eps)?;

    let real = local_systems::real_cochain_complex(sd.chain())?;
    let units = (0..sd.gens())
        .map(|s| (0..sd.gens()).map(|k| if k == s { 1.0 } else { 0.0 }).collect())
        .collect();
    let hr = symplectic_gram_schmidt(&CupForm::trivial(sd)?, units)?;
    let real = real.with_cohomology(vec![vec![vec![1.0]], hr, vec![vec![1.0]]])?;
    let parity = n_parity(real.dims(), &real.cohomology_dims(eps)?)?;
    let s = real_sign(&real, parity, eps)?;
    Ok(SurfaceTorsion { genus: sd.genus(), value: S::from_i64(s as i64) * t, real_sign: s, gram_residual })
}
