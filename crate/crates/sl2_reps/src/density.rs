use scalar_matrix::{inverse, kernel_basis, rank_eps, Matrix};

use crate::{adjoint_matrix, Mat2};

/// Why a set of generators was or was not judged Zariski-dense.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DensityReport {
    /// A line in `sl_2` fixed by every generator.
    pub invariant_line: bool,
    /// A plane in `sl_2` fixed by every generator (line of the dual action).
    pub invariant_plane: bool,
    /// Some short word in the generators has infinite order (hyperbolic or parabolic).
    pub infinite: bool,
}

impl DensityReport {
    pub fn is_dense(&self) -> bool {
        self.infinite && !self.invariant_line && !self.invariant_plane
    }
}

/// Zariski density in `SL_2(R)`: no common invariant line or plane under the
/// adjoint action, and an element of infinite order among short words in the
/// generators. Elliptic elements of irrational angle are not recognised as
/// infinite, so the answer errs towards `false`.
pub fn zariski_dense_check(gens: &[Mat2<f64>], eps: f64) -> bool {
    !gens.is_empty() && density_report(gens, eps).is_dense()
}

pub fn density_report(gens: &[Mat2<f64>], eps: f64) -> DensityReport {
    let ads: Vec<(Mat2<f64>, Matrix<f64>)> = gens.iter().map(|g| (*g, adjoint_matrix(g))).collect();
    let duals: Vec<(Mat2<f64>, Matrix<f64>)> = ads
        .iter()
        .map(|(g, a)| (*g, inverse(a, eps).map(|m| m.transpose()).unwrap_or_else(|_| a.clone())))
        .collect();
    DensityReport {
        invariant_line: common_line(&ads, eps),
        invariant_plane: common_line(&duals, eps),
        infinite: has_infinite_order(gens, eps),
    }
}

fn is_central(g: &Mat2<f64>, eps: f64) -> bool {
    let id = Mat2::identity();
    g.dist(&id) <= eps || g.dist(&id.neg()) <= eps
}

/// Eigenvalues of `Ad(g)` (and of its inverse transpose): `1, μ, 1/μ` with
/// `μ + 1/μ = tr(g)^2 - 2`; only real ones are returned.
fn real_eigenvalues(g: &Mat2<f64>, eps: f64) -> Vec<f64> {
    let s = g.trace() * g.trace() - 2.0;
    let mut out = vec![1.0];
    if s > 2.0 + eps {
        let mu = (s + (s * s - 4.0).sqrt()) / 2.0;
        out.push(mu);
        out.push(1.0 / mu);
    }
    out
}

fn common_line(mats: &[(Mat2<f64>, Matrix<f64>)], eps: f64) -> bool {
    let Some((g, a)) = mats.iter().find(|(g, _)| !is_central(g, eps)) else {
        return true;
    };
    for mu in real_eigenvalues(g, eps) {
        let shifted = a.sub(&Matrix::identity(3).scale(&mu)).expect("3x3");
        let Ok(space) = kernel_basis(&shifted, eps) else { continue };
        for v in space {
            let fixed = mats.iter().all(|(_, b)| {
                let bv = b.mul_vec(&v).expect("3x3");
                let pair = Matrix::from_columns(3, &[v.clone(), bv]).expect("length 3");
                rank_eps(&pair, eps).map(|r| r <= 1).unwrap_or(false)
            });
            if fixed {
                return true;
            }
        }
    }
    false
}

fn infinite_order(g: &Mat2<f64>, eps: f64) -> bool {
    let t = g.trace().abs();
    t > 2.0 + eps || ((t - 2.0).abs() <= eps && !is_central(g, eps))
}

/// Searches words of length at most `WORD_DEPTH` in the generators and their
/// inverses for a hyperbolic or parabolic element.
fn has_infinite_order(gens: &[Mat2<f64>], eps: f64) -> bool {
    let letters: Vec<(usize, Mat2<f64>)> =
        gens.iter().enumerate().flat_map(|(i, g)| [(2 * i, *g), (2 * i + 1, g.inverse())]).collect();
    let mut frontier: Vec<(usize, Mat2<f64>)> = letters.clone();
    for depth in 1..=WORD_DEPTH {
        if frontier.iter().any(|(_, g)| infinite_order(g, eps)) {
            return true;
        }
        if depth == WORD_DEPTH {
            break;
        }
        frontier = frontier
            .iter()
            .flat_map(|(last, w)| {
                letters
                    .iter()
                    .filter(move |(l, _)| *l != (*last ^ 1))
                    .map(move |(l, g)| (*l, *w * *g))
            })
            .collect();
    }
    false
}

const WORD_DEPTH: usize = 6;
