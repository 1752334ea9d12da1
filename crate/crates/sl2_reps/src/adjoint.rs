use scalar_matrix::{Matrix, Scalar};

use crate::{Mat2, RepError};

/// The basis `H, E, F` of `sl_2`.
pub fn sl2_basis<S: Scalar + Copy>() -> [Mat2<S>; 3] {
    let (o, z) = (S::one(), S::zero());
    [Mat2::new(o, z, z, -o), Mat2::new(z, o, z, z), Mat2::new(z, z, o, z)]
}

/// Coordinates of a traceless matrix in the basis `H, E, F`.
pub fn sl2_coords<S: Scalar + Copy>(x: &Mat2<S>) -> [S; 3] {
    [x.a, x.b, x.c]
}

pub fn from_sl2_coords<S: Scalar + Copy>(v: &[S]) -> Mat2<S> {
    Mat2::new(v[0], v[1], v[2], -v[0])
}

/// Matrix of `X -> g X g^{-1}` in the basis `H, E, F`.
pub fn adjoint_matrix<S: Scalar + Copy>(g: &Mat2<S>) -> Matrix<S> {
    let mut m = Matrix::zeros(3, 3);
    for (j, b) in sl2_basis::<S>().iter().enumerate() {
        let v = sl2_coords(&g.conjugate(b));
        for (i, x) in v.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

/// Killing form normalised as `4 tr(XY)`.
pub fn killing_form<S: Scalar + Copy>(x: &Mat2<S>, y: &Mat2<S>, eps: f64) -> Result<S, RepError> {
    for m in [x, y] {
        let t = m.trace().magnitude();
        if t > eps * m.max_abs().max(1.0) {
            return Err(RepError::NotTraceless(t));
        }
    }
    Ok(S::from_i64(4) * (*x * *y).trace())
}

/// Gram matrix of the Killing form in the basis `H, E, F`.
pub fn killing_gram<S: Scalar + Copy>() -> Matrix<S> {
    let b = sl2_basis::<S>();
    let mut m = Matrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = S::from_i64(4) * (b[i] * b[j]).trace();
        }
    }
    m
}
