use sl2_reps::{Complex64, Flavor, Mat2, Rep};

use crate::SymplecticError;

/// `C^t` for a hyperbolic `C` with positive eigenvalues, by Sylvester's
/// formula. Every such power commutes with `C`.
pub fn hyperbolic_power(c: &Mat2<f64>, t: f64) -> Result<Mat2<f64>, SymplecticError> {
    let tr = c.trace();
    if tr <= 2.0 + 1e-9 {
        return Err(SymplecticError::Construction(format!("trace {tr} is not > 2")));
    }
    let l1 = (tr + (tr * tr - 4.0).sqrt()) / 2.0;
    let l2 = 1.0 / l1;
    let (p1, p2) = (l1.powf(t), l2.powf(t));
    let k = 1.0 / (l1 - l2);
    let e = |m: Mat2<f64>, s: f64| Mat2::new(m.a * s, m.b * s, m.c * s, m.d * s);
    let minus = |l: f64| Mat2::new(c.a - l, c.b, c.c, c.d - l);
    let x = e(minus(l2), p1 * k);
    let y = e(minus(l1), p2 * k);
    Ok(Mat2::new(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d))
}

/// Genus-2 representation `a_1 -> A, b_1 -> B, a_2 -> G B G^{-1},
/// b_2 -> G A G^{-1}` with `G = [A, B]^t`. Since `G` commutes with `[A, B]`
/// the second commutator is `[A, B]^{-1}` and the relator is killed; varying
/// `t` (or `A`, `B`) continuously stays in one component.
pub fn doubled_rep(a: Mat2<f64>, b: Mat2<f64>, t: f64) -> Result<Rep<f64>, SymplecticError> {
    let c = a * b * a.inverse() * b.inverse();
    let g = hyperbolic_power(&c, t)?;
    Ok(Rep::sl2r(vec![a, b, g.conjugate(&b), g.conjugate(&a)]))
}

/// The standard hyperbolic/elliptic pair used as the default `SL_2(R)` target.
pub fn default_sl2r_pair() -> (Mat2<f64>, Mat2<f64>) {
    let a = Mat2::new(1.25, 0.5, 0.5, 1.0);
    let b = Mat2::new(0.6, -0.8, 0.9, (1.0 - 0.8 * 0.9) / 0.6);
    (a, b)
}

/// The irreducible `SU(2)` representation `f_0` of the genus-2 surface group.
pub fn su2_f0() -> Rep<Complex64> {
    let c = Complex64::new;
    let s10 = 10f64.sqrt();
    let a1 = Mat2::new(
        c((2.0 - s10) / 6.0, 2.0 / 6.0),
        c(-2.0 / 6.0, (2.0 + s10) / 6.0),
        c(2.0 / 6.0, (2.0 + s10) / 6.0),
        c((2.0 - s10) / 6.0, -2.0 / 6.0),
    );
    let q = c(0.0, -1.0 / 2f64.sqrt());
    let b1 = Mat2::new(-q, -q, -q, q);
    let a2 = Mat2::new(c(0.5, -0.5), c(-0.5, 0.5), c(0.5, 0.5), c(0.5, 0.5));
    let r = 1.0 / 2f64.sqrt();
    let b2 = Mat2::new(c(r, 0.0), c(-r, 0.0), c(r, 0.0), c(r, 0.0));
    Rep::new(vec![a1, b1, a2, b2], Flavor::Su2)
}
