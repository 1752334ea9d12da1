use std::f64::consts::PI;

const PI2_6: f64 = PI * PI / 6.0;

/// Real dilogarithm `Li_2(x)` for `x <= 1`.
pub fn li2(x: f64) -> f64 {
    assert!(x <= 1.0, "li2 is real only for x <= 1, got {x}");
    if x == 1.0 {
        PI2_6
    } else if x > 0.5 {
        PI2_6 - x.ln() * (1.0 - x).ln() - li2(1.0 - x)
    } else if x >= -0.5 {
        series(x)
    } else if x >= -1.0 {
        // Landen: x/(x-1) lies in [1/3, 1/2]
        -series(x / (x - 1.0)) - 0.5 * (1.0 - x).ln().powi(2)
    } else {
        -PI2_6 - 0.5 * (-x).ln().powi(2) - li2(1.0 / x)
    }
}

fn series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = 0.0_f64;
    let mut k = 1.0;
    while term.abs() > 1e-18 * sum.abs().max(1e-300) && k < 200.0 {
        sum += term / (k * k);
        term *= x;
        k += 1.0;
    }
    sum
}

/// Rogers' function normalised with `L(0) = -π²/6`, `L(1) = 0`:
/// `L(x) = Li_2(x) + ½ log x log(1-x) - π²/6` on `[0, 1]`, extended by
/// `L(x) = -L(1/x)` for `x > 1` and `L(x) = L(1 - 1/x)` for `x < 0`.
pub fn rogers_l(x: f64) -> f64 {
    if x < 0.0 {
        rogers_l(1.0 - 1.0 / x)
    } else if x > 1.0 {
        -rogers_l(1.0 / x)
    } else if x == 0.0 {
        -PI2_6
    } else if x == 1.0 {
        0.0
    } else {
        li2(x) + 0.5 * x.ln() * (1.0 - x).ln() - PI2_6
    }
}
