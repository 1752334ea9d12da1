use scalar_matrix::{kernel_basis, pivot_columns, rank_eps, Matrix, Scalar};

use crate::TorsionError;

/// A finite cochain complex `0 -> C^0 -> C^1 -> ... -> C^m -> 0` with the
/// standard bases of `C^i = F^{dims[i]}` as distinguished bases, and optional
/// cohomology bases given as cocycle vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct BasedComplex<T> {
    dims: Vec<usize>,
    coboundaries: Vec<Matrix<T>>,
    cohomology: Vec<Vec<Vec<T>>>,
}

impl<T: Scalar> BasedComplex<T> {
    /// `coboundaries[i]` is the `dims[i+1] x dims[i]` matrix of `∂^i`.
    pub fn new(dims: Vec<usize>, coboundaries: Vec<Matrix<T>>) -> Result<Self, TorsionError> {
        if dims.is_empty() || coboundaries.len() + 1 != dims.len() {
            return Err(TorsionError::Length { dims: dims.len(), maps: coboundaries.len() });
        }
        for (i, d) in coboundaries.iter().enumerate() {
            if d.rows() != dims[i + 1] || d.cols() != dims[i] {
                return Err(TorsionError::MapShape {
                    degree: i,
                    expected: (dims[i + 1], dims[i]),
                    got: (d.rows(), d.cols()),
                });
            }
        }
        let cohomology = vec![Vec::new(); dims.len()];
        Ok(BasedComplex { dims, coboundaries, cohomology })
    }

    /// Attach cohomology bases (one list of cocycle vectors per degree).
    pub fn with_cohomology(mut self, h: Vec<Vec<Vec<T>>>) -> Result<Self, TorsionError> {
        if h.len() != self.dims.len() {
            return Err(TorsionError::Length { dims: self.dims.len(), maps: h.len() });
        }
        for (i, hi) in h.iter().enumerate() {
            if hi.iter().any(|v| v.len() != self.dims[i]) {
                return Err(TorsionError::CohomologyDims { degree: i });
            }
        }
        self.cohomology = h;
        Ok(self)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of degrees, `m + 1`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn coboundary(&self, i: usize) -> &Matrix<T> {
        &self.coboundaries[i]
    }

    pub fn coboundaries(&self) -> &[Matrix<T>] {
        &self.coboundaries
    }

    pub fn cohomology(&self, i: usize) -> &[Vec<T>] {
        &self.cohomology[i]
    }

    pub fn has_cohomology_bases(&self) -> bool {
        self.cohomology.iter().any(|h| !h.is_empty())
    }

    /// Largest entry of `∂^{i+1} ∂^i` over all degrees.
    pub fn square_residual(&self) -> f64 {
        self.coboundaries
            .windows(2)
            .map(|w| w[1].matmul(&w[0]).expect("shapes checked").max_abs())
            .fold(0.0, f64::max)
    }

    /// Verify `∂∘∂ = 0`, exactly or up to `eps` relative to the map sizes.
    pub fn check_complex(&self, eps: f64) -> Result<(), TorsionError> {
        for (i, w) in self.coboundaries.windows(2).enumerate() {
            let prod = w[1].matmul(&w[0]).expect("shapes checked");
            let bad = if T::EXACT {
                prod.data().iter().any(|x| !x.is_zero())
            } else {
                let scale = (w[0].norm_inf() * w[1].norm_inf()).max(1.0);
                prod.max_abs() > eps.max(1e-12) * 1e3 * scale
            };
            if bad {
                return Err(TorsionError::NotAComplex { degree: i, residual: prod.max_abs() });
            }
        }
        Ok(())
    }

    /// Ranks of the coboundaries.
    pub fn ranks(&self, eps: f64) -> Result<Vec<usize>, TorsionError> {
        Ok(self.coboundaries.iter().map(|d| rank_eps(d, eps)).collect::<Result<_, _>>()?)
    }

    /// `dim H^i` for every degree.
    pub fn cohomology_dims(&self, eps: f64) -> Result<Vec<usize>, TorsionError> {
        let r = self.ranks(eps)?;
        Ok((0..self.len())
            .map(|i| {
                let into = if i > 0 { r[i - 1] } else { 0 };
                let out = if i < r.len() { r[i] } else { 0 };
                self.dims[i] - into - out
            })
            .collect())
    }

    pub fn is_acyclic(&self, eps: f64) -> Result<bool, TorsionError> {
        Ok(self.cohomology_dims(eps)?.iter().all(|&h| h == 0))
    }

    /// Some cohomology basis: cocycles completing a basis of the coboundaries.
    pub fn default_cohomology_basis(&self, eps: f64) -> Result<Vec<Vec<Vec<T>>>, TorsionError> {
        let mut out = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let n = self.dims[i];
            let cocycles = if i < self.coboundaries.len() {
                kernel_basis(&self.coboundaries[i], eps)?
            } else {
                (0..n).map(|k| unit::<T>(n, k)).collect()
            };
            let mut kept: Vec<Vec<T>> = Vec::new();
            if i > 0 {
                let d = &self.coboundaries[i - 1];
                for p in pivot_columns(d, eps)? {
                    kept.push(d.column(p));
                }
            }
            let base = kept.len();
            for z in cocycles {
                let mut trial = kept.clone();
                trial.push(z.clone());
                let m = Matrix::from_columns(n, &trial)?;
                if rank_eps(&m, eps)? == trial.len() {
                    kept = trial;
                }
            }
            out.push(kept.split_off(base));
        }
        Ok(out)
    }
}

pub(crate) fn unit<T: Scalar>(n: usize, k: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[k] = T::one();
    v
}
