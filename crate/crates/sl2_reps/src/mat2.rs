use std::fmt;
use std::ops::Mul;

use scalar_matrix::{Complex64, Scalar};

/// A 2x2 matrix `[[a, b], [c, d]]`, expected to have unit determinant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar + Copy> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn det(&self) -> S {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> S {
        self.a + self.d
    }

    /// Inverse via the adjugate, divided by the determinant.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }

    pub fn entries(&self) -> [S; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Largest entrywise distance.
    pub fn dist(&self, other: &Self) -> f64 {
        self.entries().iter().zip(other.entries()).map(|(x, y)| (*x - y).magnitude()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// `g h g^{-1}`.
    pub fn conjugate(&self, h: &Self) -> Self {
        *self * *h * self.inverse()
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc * base)
    }
}

impl<S: Scalar + Copy> Mul for Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, o: Mat2<S>) -> Mat2<S> {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Mat2<f64> {
    /// Rotation by `theta`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Mat2::new(c, -s, s, c)
    }

    pub fn diag(l: f64) -> Self {
        Mat2::new(l, 0.0, 0.0, 1.0 / l)
    }

    pub fn to_complex(&self) -> Mat2<Complex64> {
        let z = |x: f64| Complex64::new(x, 0.0);
        Mat2::new(z(self.a), z(self.b), z(self.c), z(self.d))
    }
}

impl<S: fmt::Display> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
