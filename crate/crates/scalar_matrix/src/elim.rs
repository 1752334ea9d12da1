use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::MatrixError;

/// Default relative tolerance for rank decisions on the float backends.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Check that `eps` is admissible for the backend `T`.
pub fn check_eps<T: Scalar>(eps: f64) -> Result<(), MatrixError> {
    if eps.is_nan() || eps < 0.0 {
        return Err(MatrixError::NegativeTolerance(eps));
    }
    if T::EXACT && eps != 0.0 {
        return Err(MatrixError::ExactTolerance(eps));
    }
    Ok(())
}

/// Reduced row echelon form obtained by Gauss-Jordan elimination with
/// complete pivoting.
#[derive(Clone, Debug)]
pub struct Reduced<T> {
    pub rank: usize,
    /// Pivot columns (original indices) in elimination order. Row `k` of
    /// `rref` has a unit entry in column `pivot_cols[k]`.
    pub pivot_cols: Vec<usize>,
    pub rref: Matrix<T>,
    /// Largest entry magnitude of the input, the scale of the threshold.
    pub scale: f64,
}

/// Gauss-Jordan with complete pivoting. A pivot is accepted while its
/// magnitude exceeds `eps * scale`, where `scale` is the first (largest)
/// pivot. With `aug` extra trailing columns, those columns are carried
/// along but never chosen as pivots.
fn gauss_jordan<T: Scalar>(m: &Matrix<T>, eps: f64, aug: usize) -> Reduced<T> {
    let rows = m.rows();
    let cols = m.cols() - aug;
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut is_pivot = vec![false; cols];
    let mut scale = 0.0f64;
    for k in 0..rows.min(cols) {
        let mut best = (0.0f64, usize::MAX, usize::MAX);
        for i in k..rows {
            for j in (0..cols).filter(|&j| !is_pivot[j]) {
                let mag = a[(i, j)].magnitude();
                if mag > best.0 {
                    best = (mag, i, j);
                }
            }
        }
        let (mag, pi, pj) = best;
        if k == 0 {
            scale = mag;
        }
        if mag == 0.0 || (!T::EXACT && mag <= eps * scale) {
            break;
        }
        if T::EXACT && a[(pi, pj)].is_zero() {
            break;
        }
        swap_rows(&mut a, k, pi);
        let inv = T::one() / a[(k, pj)].clone();
        for j in 0..a.cols() {
            let v = a[(k, j)].clone() * inv.clone();
            a[(k, j)] = v;
        }
        for i in (0..rows).filter(|&i| i != k) {
            let f = a[(i, pj)].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..a.cols() {
                let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                a[(i, j)] = v;
            }
        }
        is_pivot[pj] = true;
        pivot_cols.push(pj);
    }
    Reduced { rank: pivot_cols.len(), pivot_cols, rref: a, scale }
}

fn swap_rows<T: Scalar>(a: &mut Matrix<T>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols() {
        let t = a[(r1, j)].clone();
        a[(r1, j)] = a[(r2, j)].clone();
        a[(r2, j)] = t;
    }
}

pub fn reduce<T: Scalar>(m: &Matrix<T>, eps: f64) -> Result<Reduced<T>, MatrixError> {
    check_eps::<T>(eps)?;
    Ok(gauss_jordan(m, eps, 0))
}

/// Determinant by LU with partial pivoting.
pub fn det<T: Scalar>(m: &Matrix<T>) -> Result<T, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut acc = T::one();
    for k in 0..n {
        let (mut best, mut pi) = (0.0f64, k);
        for i in k..n {
            let mag = a[(i, k)].magnitude();
            if mag > best {
                best = mag;
                pi = i;
            }
        }
        if a[(pi, k)].is_zero() {
            return Ok(T::zero());
        }
        if pi != k {
            swap_rows(&mut a, k, pi);
            acc = -acc;
        }
        let p = a[(k, k)].clone();
        for i in k + 1..n {
            let f = a[(i, k)].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                a[(i, j)] = v;
            }
        }
        acc = acc * p;
    }
    Ok(acc)
}

/// Numerical rank under complete pivoting: pivots above `eps` times the
/// largest pivot. `eps` must be zero on the exact backend.
pub fn rank_eps<T: Scalar>(m: &Matrix<T>, eps: f64) -> Result<usize, MatrixError> {
    Ok(reduce(m, eps)?.rank)
}

/// Basis of the null space, each vector scaled so that its first nonzero
/// entry (above `eps` times its largest entry) is 1.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>, eps: f64) -> Result<Vec<Vec<T>>, MatrixError> {
    let red = reduce(m, eps)?;
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivot_cols {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![T::zero(); cols];
        v[f] = T::one();
        for (k, &p) in red.pivot_cols.iter().enumerate() {
            v[p] = -red.rref[(k, f)].clone();
        }
        // On float backends rounding residue must not be taken as the lead.
        let big = v.iter().map(|x| x.magnitude()).fold(0.0, f64::max);
        let lead = v
            .iter()
            .find(|x| !x.is_zero() && x.magnitude() > eps * big)
            .cloned()
            .unwrap_or_else(T::one);
        for x in v.iter_mut() {
            *x = x.clone() / lead.clone();
        }
        out.push(v);
    }
    Ok(out)
}

/// Sorted indices of a maximal set of independent columns, chosen by
/// complete-pivoting elimination.
pub fn pivot_columns<T: Scalar>(m: &Matrix<T>, eps: f64) -> Result<Vec<usize>, MatrixError> {
    let mut p = reduce(m, eps)?.pivot_cols;
    p.sort_unstable();
    Ok(p)
}

/// Greedy independent column choice scanning columns in the given order.
/// Any such choice is a valid pivot subset; used to test that results do not
/// depend on the subset.
pub fn independent_columns_in_order<T: Scalar>(
    m: &Matrix<T>,
    order: &[usize],
    eps: f64,
) -> Result<Vec<usize>, MatrixError> {
    check_eps::<T>(eps)?;
    let target = rank_eps(m, eps)?;
    let mut kept: Vec<usize> = Vec::new();
    for &j in order {
        if kept.len() == target {
            break;
        }
        let mut trial = kept.clone();
        trial.push(j);
        if rank_eps(&m.select_columns(&trial), eps)? == trial.len() {
            kept = trial;
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// A particular solution of `A x = b`, or an error if the system is
/// inconsistent (exactly, or beyond the tolerance on float backends).
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T], eps: f64) -> Result<Vec<T>, MatrixError> {
    check_eps::<T>(eps)?;
    if b.len() != a.rows() {
        return Err(MatrixError::Shape { expected: (a.rows(), 1), got: (b.len(), 1) });
    }
    let bcol = Matrix::from_columns(a.rows(), &[b.to_vec()])?;
    let aug = a.hstack(&bcol)?;
    let red = gauss_jordan(&aug, eps, 1);
    let last = a.cols();
    let mut x = vec![T::zero(); a.cols()];
    for (k, &p) in red.pivot_cols.iter().enumerate() {
        x[p] = red.rref[(k, last)].clone();
    }
    let r = a.mul_vec(&x)?;
    let resid = r.iter().zip(b).map(|(u, v)| (u.clone() - v.clone()).magnitude()).fold(0.0, f64::max);
    let ok = if T::EXACT {
        resid == 0.0 && r.iter().zip(b).all(|(u, v)| (u.clone() - v.clone()).is_zero())
    } else {
        let xs = x.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        let bs = b.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        resid <= 1e3 * eps.max(f64::EPSILON) * (a.norm_inf() * xs + bs).max(f64::MIN_POSITIVE)
    };
    if ok {
        Ok(x)
    } else {
        Err(MatrixError::Inconsistent(resid))
    }
}

/// Inverse of a square matrix.
pub fn inverse<T: Scalar>(m: &Matrix<T>, eps: f64) -> Result<Matrix<T>, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows(), m.cols()));
    }
    check_eps::<T>(eps)?;
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(n))?;
    let red = gauss_jordan(&aug, eps, n);
    if red.rank < n {
        return Err(MatrixError::Singular);
    }
    let mut inv = Matrix::zeros(n, n);
    for (k, &p) in red.pivot_cols.iter().enumerate() {
        for j in 0..n {
            inv[(p, j)] = red.rref[(k, n + j)].clone();
        }
    }
    Ok(inv)
}
