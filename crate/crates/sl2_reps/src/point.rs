use crate::Mat2;

/// A point of the real projective line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProjPoint {
    Finite(f64),
    Infinity,
}

impl ProjPoint {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    /// Chordal distance on the circle `RP^1`, in `[0, 1]`.
    pub fn chordal(&self, other: &ProjPoint) -> f64 {
        match (self, other) {
            (ProjPoint::Infinity, ProjPoint::Infinity) => 0.0,
            (ProjPoint::Finite(x), ProjPoint::Infinity) | (ProjPoint::Infinity, ProjPoint::Finite(x)) => {
                1.0 / (1.0 + x * x).sqrt()
            }
            (ProjPoint::Finite(x), ProjPoint::Finite(y)) => (x - y).abs() / ((1.0 + x * x).sqrt() * (1.0 + y * y).sqrt()),
        }
    }
}

/// The point `g∞` as written in the cocycle formula: `b/d` if `d ≠ 0`,
/// otherwise `a/c`.
pub fn mobius_infinity(g: &Mat2<f64>) -> ProjPoint {
    if g.d != 0.0 {
        ProjPoint::Finite(g.b / g.d)
    } else {
        ProjPoint::Finite(g.a / g.c)
    }
}

/// The Möbius image of `0`, `z -> (a z + b)/(c z + d)` at `z = 0`. Agrees with
/// [`mobius_infinity`] whenever `d ≠ 0` and is an honest group action.
pub fn mobius_point(g: &Mat2<f64>) -> ProjPoint {
    if g.d != 0.0 {
        ProjPoint::Finite(g.b / g.d)
    } else {
        ProjPoint::Infinity
    }
}

/// Möbius action on an arbitrary point.
pub fn mobius_act(g: &Mat2<f64>, p: ProjPoint) -> ProjPoint {
    match p {
        ProjPoint::Infinity => {
            if g.c != 0.0 {
                ProjPoint::Finite(g.a / g.c)
            } else {
                ProjPoint::Infinity
            }
        }
        ProjPoint::Finite(z) => {
            let den = g.c * z + g.d;
            if den != 0.0 {
                ProjPoint::Finite((g.a * z + g.b) / den)
            } else {
                ProjPoint::Infinity
            }
        }
    }
}
