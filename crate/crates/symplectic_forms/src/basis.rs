use local_systems::{twisted_cochain_complex, CoefficientKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_matrix::{Matrix, Scalar};
use sl2_reps::Rep;
use torsion_core::BasedComplex;

use crate::{CupForm, SurfaceData, SymplecticError};

/// Pairs whose value is below this fraction of the largest Gram entry are
/// treated as zero by the symplectic Gram-Schmidt process.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Gram matrix `(form(v_i, v_j))`.
pub fn gram_matrix<S: Scalar + Copy>(form: &CupForm<S>, vecs: &[Vec<S>]) -> Result<Matrix<S>, SymplecticError> {
    let k = vecs.len();
    let mut m = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] = form.pair(&vecs[i], &vecs[j])?;
        }
    }
    Ok(m)
}

/// Largest entry of `G - J`, where `J` is the standard symplectic matrix on
/// interleaved pairs `(e_1, f_1, e_2, f_2, ...)`.
pub fn symplectic_residual<S: Scalar + Copy>(gram: &Matrix<S>) -> f64 {
    let k = gram.rows();
    let mut worst = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            let target = match (i % 2, j) {
                (0, j) if j == i + 1 => S::one(),
                (1, j) if j + 1 == i => -S::one(),
                _ => S::zero(),
            };
            worst = worst.max((gram[(i, j)] - target).magnitude());
        }
    }
    worst
}

/// Symplectic Gram-Schmidt: repeatedly take the pair with the largest
/// pairing, normalise it to `form(e, f) = 1` and project it out of the rest.
pub fn symplectic_gram_schmidt<S: Scalar + Copy>(
    form: &CupForm<S>,
    vecs: Vec<Vec<S>>,
) -> Result<Vec<Vec<S>>, SymplecticError> {
    if vecs.len() % 2 == 1 {
        return Err(SymplecticError::Degenerate { remaining: vecs.len() });
    }
    let scale = gram_matrix(form, &vecs)?.max_abs().max(f64::MIN_POSITIVE);
    let mut rest = vecs;
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<(S, usize, usize)> = None;
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                let v = form.pair(&rest[i], &rest[j])?;
                if best.as_ref().map_or(true, |(b, _, _)| v.magnitude() > b.magnitude()) {
                    best = Some((v, i, j));
                }
            }
        }
        let (val, i, j) = best.expect("at least two vectors");
        if val.magnitude() <= DEGENERACY_TOL * scale {
            return Err(SymplecticError::Degenerate { remaining: rest.len() });
        }
        let e = rest[i].clone();
        let f: Vec<S> = rest[j].iter().map(|x| *x / val).collect();
        let mut next = Vec::with_capacity(rest.len() - 2);
        for (k, v) in rest.into_iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (vf, ve) = (form.pair(&v, &f)?, form.pair(&v, &e)?);
            next.push(v.iter().zip(&e).zip(&f).map(|((x, ei), fi)| *x - vf * *ei + ve * *fi).collect());
        }
        out.push(e);
        out.push(f);
        rest = next;
    }
    Ok(out)
}

/// The adjoint cochain complex of the surface, checked to have
/// `H^0 = H^2 = 0`.
pub fn surface_complex<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    eps: f64,
) -> Result<BasedComplex<S>, SymplecticError> {
    let c = twisted_cochain_complex(sd.chain(), rho, CoefficientKind::Adjoint3, eps)?;
    let h = c.cohomology_dims(eps)?;
    if h[0] != 0 || h[2] != 0 || h[1] != sd.h1_dim() {
        return Err(SymplecticError::Reducible { h0: h[0], h1: h[1], h2: h[2] });
    }
    Ok(c)
}

/// A basis of `H^1_ρ(Σ; sl_2)` (as cocycles) that is symplectic for the cup
/// pairing.
pub fn symplectic_basis<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    eps: f64,
) -> Result<Vec<Vec<S>>, SymplecticError> {
    symplectic_basis_seeded(rho, sd, None, eps)
}

/// As [`symplectic_basis`], but with a seed the starting cocycles are first
/// scrambled by a random integer change of basis and random coboundaries,
/// giving a different symplectic basis of the same space.
pub fn symplectic_basis_seeded<S: Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    seed: Option<u64>,
    eps: f64,
) -> Result<Vec<Vec<S>>, SymplecticError> {
    symplectic_basis_for(&CupForm::adjoint(rho, sd)?, rho, sd, seed, eps)
}

/// Symplectic basis for an arbitrary adjoint cup form (for instance one
/// built with a different multiple of the trace form).
pub fn symplectic_basis_for<S: Scalar + Copy>(
    form: &CupForm<S>,
    rho: &Rep<S>,
    sd: &SurfaceData,
    seed: Option<u64>,
    eps: f64,
) -> Result<Vec<Vec<S>>, SymplecticError> {
    let c = surface_complex(rho, sd, eps)?;
    let mut vecs = c.default_cohomology_basis(eps)?.swap_remove(1);
    if let Some(seed) = seed {
        vecs = scramble(vecs, c.coboundary(0), seed);
    }
    symplectic_gram_schmidt(form, vecs)
}

fn scramble<S: Scalar + Copy>(vecs: Vec<Vec<S>>, d0: &Matrix<S>, seed: u64) -> Vec<Vec<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = vecs.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        // Unit lower-triangular mixing keeps the change of basis invertible.
        let mut v = vecs[i].clone();
        for w in vecs.iter().take(i) {
            let c = S::from_i64(rng.gen_range(-3..=3));
            for (x, y) in v.iter_mut().zip(w) {
                *x = *x + c * *y;
            }
        }
        let z: Vec<S> = (0..d0.cols()).map(|_| S::from_i64(rng.gen_range(-3..=3))).collect();
        for (x, y) in v.iter_mut().zip(d0.mul_vec(&z).expect("shape")) {
            *x = *x + y;
        }
        out.push(v);
    }
    // Shuffle so that the pivot order changes too.
    for i in (1..k).rev() {
        out.swap(i, rng.gen_range(0..=i));
    }
    out
}
