use scalar_matrix::{det, pivot_columns, Matrix, RealScalar, Scalar};

use crate::complex::{unit, BasedComplex};
use crate::TorsionError;

/// Algebraic torsion
///
/// `T = Π det[b_{2i} h_{2i} b~_{2i+1} / c_{2i}] / Π det[b_{2i-1} h_{2i-1} b~_{2i} / c_{2i-1}]`
///
/// with `b~_{i+1}` the standard vectors at a maximal set of independent
/// columns of `∂^i` (chosen by complete pivoting) and `b_{i+1}` their images.
pub fn compute_torsion<T: Scalar>(c: &BasedComplex<T>, eps: f64) -> Result<T, TorsionError> {
    let pivots = c
        .coboundaries()
        .iter()
        .map(|d| pivot_columns(d, eps))
        .collect::<Result<Vec<_>, _>>()?;
    compute_torsion_with_pivots(c, eps, &pivots)
}

/// Torsion with caller-supplied pivot columns for each coboundary. Each
/// `pivots[i]` must index a maximal independent set of columns of `∂^i`.
pub fn compute_torsion_with_pivots<T: Scalar>(
    c: &BasedComplex<T>,
    eps: f64,
    pivots: &[Vec<usize>],
) -> Result<T, TorsionError> {
    c.check_complex(eps)?;
    let ranks = c.ranks(eps)?;
    if pivots.len() != ranks.len() || pivots.iter().zip(&ranks).any(|(p, &r)| p.len() != r) {
        return Err(TorsionError::BadPivots);
    }
    let hdims = c.cohomology_dims(eps)?;
    let mut num = T::one();
    let mut den = T::one();
    for i in 0..c.len() {
        let n = c.dims()[i];
        let h = c.cohomology(i);
        if h.len() != hdims[i] {
            return Err(if h.is_empty() {
                TorsionError::NotAcyclic { degree: i, dim: hdims[i] }
            } else {
                TorsionError::CohomologyCount { degree: i, expected: hdims[i], got: h.len() }
            });
        }
        if i < c.len() - 1 && !h.is_empty() {
            check_cocycles(c.coboundary(i), h, eps, i)?;
        }
        if n == 0 {
            continue;
        }
        let mut cols: Vec<Vec<T>> = Vec::with_capacity(n);
        if i > 0 {
            let d = c.coboundary(i - 1);
            cols.extend(pivots[i - 1].iter().map(|&p| d.column(p)));
        }
        cols.extend(h.iter().cloned());
        if i < pivots.len() {
            cols.extend(pivots[i].iter().map(|&p| unit::<T>(n, p)));
        }
        let m = Matrix::from_columns(n, &cols)?;
        let d = det(&m)?;
        if d.magnitude() == 0.0 {
            return Err(TorsionError::DegenerateBasis { degree: i });
        }
        if i % 2 == 0 {
            num = num * d;
        } else {
            den = den * d;
        }
    }
    Ok(num / den)
}

fn check_cocycles<T: Scalar>(d: &Matrix<T>, h: &[Vec<T>], eps: f64, degree: usize) -> Result<(), TorsionError> {
    for v in h {
        let img = d.mul_vec(v)?;
        let res = img.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        let scale = d.norm_inf() * v.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        let bad = if T::EXACT { img.iter().any(|x| !x.is_zero()) } else { res > 1e3 * eps.max(1e-12) * scale.max(1.0) };
        if bad {
            return Err(TorsionError::NotCocycle { degree, residual: res });
        }
    }
    Ok(())
}

/// Basis change in one degree: `c` is the matrix `[c/c']` and `h` the matrix
/// `[h~'/h~]`; either may be omitted (identity).
#[derive(Clone, Debug, Default)]
pub struct BasisChange<T> {
    pub c: Option<Matrix<T>>,
    pub h: Option<Matrix<T>>,
}

/// Torsion with respect to new bases. With `[d/e]` the matrix expressing `d`
/// in terms of `e`, recomputing the defining determinants gives
/// `T' = T · Π_j (det[c_j/c'_j] det[h~'_j/h~_j])^{(-1)^j}`.
pub fn rebase_torsion<T: Scalar>(t: T, changes: &[BasisChange<T>]) -> Result<T, TorsionError> {
    let mut out = t;
    for (j, ch) in changes.iter().enumerate() {
        let mut f = T::one();
        for m in [&ch.c, &ch.h].into_iter().flatten() {
            let d = det(m)?;
            if d.is_zero() {
                return Err(TorsionError::SingularChange { degree: j });
            }
            f = f * d;
        }
        out = if j % 2 == 0 { out * f } else { out / f };
    }
    Ok(out)
}

/// The parity `N(X)` entering the sign of the refined torsion:
///
/// `N(X) = Σ_{i=0}^{d} (Σ_{j≤i} dim H^{d-j}) (Σ_{j≤i} dim C^{d-j})  mod 2`
///
/// with `d = dim X`.
pub fn n_parity(cell_dims: &[usize], betti: &[usize]) -> Result<u8, TorsionError> {
    if cell_dims.len() != betti.len() || cell_dims.is_empty() {
        return Err(TorsionError::Length { dims: cell_dims.len(), maps: betti.len() });
    }
    let d = cell_dims.len() - 1;
    let mut total = 0usize;
    let (mut hs, mut cs) = (0usize, 0usize);
    for i in 0..=d {
        hs += betti[d - i];
        cs += cell_dims[d - i];
        total += hs * cs;
    }
    Ok((total % 2) as u8)
}

/// Sign of `(-1)^N T(C*(X;R), c, h^R)`.
pub fn real_sign<R: RealScalar>(real: &BasedComplex<R>, parity: u8, eps: f64) -> Result<i8, TorsionError> {
    let t = compute_torsion(real, eps)?;
    let s = t.signum();
    if s == 0 {
        return Err(TorsionError::DegenerateBasis { degree: 0 });
    }
    Ok(if parity % 2 == 1 { -s } else { s })
}

/// Refined torsion `τ⁰ = sign((-1)^N T_R) · T_ρ` with an explicit parity.
pub fn refined_torsion_with_parity<R: RealScalar, T: Scalar>(
    real: &BasedComplex<R>,
    twisted: &BasedComplex<T>,
    parity: u8,
    eps: f64,
) -> Result<T, TorsionError> {
    same_cells(real, twisted)?;
    let s = real_sign(real, parity, eps)?;
    let t = compute_torsion(twisted, eps)?;
    Ok(T::from_i64(s as i64) * t)
}

/// Refined torsion with `N(X)` computed from the real complex itself.
pub fn refined_torsion<R: RealScalar, T: Scalar>(
    real: &BasedComplex<R>,
    twisted: &BasedComplex<T>,
    eps: f64,
) -> Result<T, TorsionError> {
    let betti = real.cohomology_dims(eps)?;
    let parity = n_parity(real.dims(), &betti)?;
    refined_torsion_with_parity(real, twisted, parity, eps)
}

fn same_cells<R: Scalar, T: Scalar>(real: &BasedComplex<R>, twisted: &BasedComplex<T>) -> Result<(), TorsionError> {
    let ok = real.len() == twisted.len() && {
        let n = real
            .dims()
            .iter()
            .zip(twisted.dims())
            .find(|(r, _)| **r > 0)
            .map(|(r, t)| t / r)
            .unwrap_or(0);
        n > 0 && real.dims().iter().zip(twisted.dims()).all(|(r, t)| r * n == *t)
    };
    if ok {
        Ok(())
    } else {
        Err(TorsionError::CellMismatch { real: real.dims().to_vec(), twisted: twisted.dims().to_vec() })
    }
}

/// Helper: the standard basis vectors at `idx` as columns.
pub fn unit_columns<T: Scalar>(n: usize, idx: &[usize]) -> Matrix<T> {
    let cols: Vec<Vec<T>> = idx.iter().map(|&k| unit(n, k)).collect();
    Matrix::from_columns(n, &cols).expect("consistent lengths")
}
