//! The dilogarithm 3-cocycle on `SL_2(R)`:
//! `l(g0, g1, g2, g3) = -L({0, g0⁻¹g1·0, g0⁻¹g2·0, g0⁻¹g3·0}) / 4π²` in `R/Z`,
//! where `L` is Rogers' function and `{…}` the cross-ratio. Tuples with two
//! coinciding points are assigned 0.

mod dilog;
mod modone;

use std::f64::consts::PI;

pub use dilog::{li2, rogers_l};
pub use modone::ModOne;
pub use sl2_reps::ProjPoint;
use sl2_reps::{mobius_point, Mat2};

/// Chordal distance below which two projective points count as equal.
pub const EPS_PROJ: f64 = 1e-8;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CsError {
    #[error("cross-ratio needs four distinct points")]
    Coincident,
}

/// `{a0, a1, a2, a3} = (a0-a2)/(a0-a3) · (a1-a3)/(a1-a2)`, with factors
/// involving `∞` cancelled in pairs.
pub fn cross_ratio(a: [ProjPoint; 4]) -> Result<f64, CsError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if a[i] == a[j] {
                return Err(CsError::Coincident);
            }
        }
    }
    let inf = a.iter().position(ProjPoint::is_infinite);
    let v = |k: usize| match a[k] {
        ProjPoint::Finite(x) => x,
        ProjPoint::Infinity => f64::NAN,
    };
    let r = match inf {
        None => (v(0) - v(2)) / (v(0) - v(3)) * (v(1) - v(3)) / (v(1) - v(2)),
        Some(0) => (v(1) - v(3)) / (v(1) - v(2)),
        Some(1) => (v(0) - v(2)) / (v(0) - v(3)),
        Some(2) => (v(1) - v(3)) / (v(0) - v(3)),
        Some(_) => (v(0) - v(2)) / (v(1) - v(2)),
    };
    Ok(r)
}

fn degenerate(p: &[ProjPoint; 4]) -> bool {
    (0..4).any(|i| (i + 1..4).any(|j| p[i].chordal(&p[j]) < EPS_PROJ))
}

/// The four points `0, g0⁻¹g1·0, g0⁻¹g2·0, g0⁻¹g3·0`.
pub fn cocycle_points(g: [&Mat2<f64>; 4]) -> [ProjPoint; 4] {
    let inv = g[0].inverse();
    [
        ProjPoint::Finite(0.0),
        mobius_point(&(inv * *g[1])),
        mobius_point(&(inv * *g[2])),
        mobius_point(&(inv * *g[3])),
    ]
}

/// Real value `-L({…})/4π²` before reduction, or 0 for degenerate tuples.
pub fn cocycle_l_real(g: [&Mat2<f64>; 4]) -> f64 {
    let p = cocycle_points(g);
    if degenerate(&p) {
        return 0.0;
    }
    let cr = cross_ratio(p).expect("points are distinct");
    -rogers_l(cr) / (4.0 * PI * PI)
}

/// The cocycle `l` reduced mod 1.
pub fn cocycle_l(g0: &Mat2<f64>, g1: &Mat2<f64>, g2: &Mat2<f64>, g3: &Mat2<f64>) -> ModOne {
    ModOne::new(cocycle_l_real([g0, g1, g2, g3]))
}
