use std::f64::consts::TAU;

use fox_words::{GroupRingElt, Presentation, Word};
use local_systems::{twisted_cochain_complex, ChainData, CoefficientKind};
use sl2_reps::{Mat2, Rep};
use torsion_core::compute_torsion;

use crate::{CatalogError, ManifoldData};

/// Margin for the strict inequality `β² + γ² > 4`.
const ADMISSIBLE_MARGIN: f64 = 1e-12;

/// `M_{m,n}` for odd `m, n` with `1/m + 1/n < 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeifertSpec {
    pub m: u32,
    pub n: u32,
}

impl SeifertSpec {
    pub fn new(m: u32, n: u32) -> Result<Self, CatalogError> {
        if m % 2 == 0 || n % 2 == 0 {
            return Err(CatalogError::InvalidSpec(format!("M_{{{m},{n}}}: m and n must be odd")));
        }
        if m == 0 || n == 0 || 2 * (m + n) >= m * n {
            return Err(CatalogError::InvalidSpec(format!("M_{{{m},{n}}}: need 1/m + 1/n < 1/2")));
        }
        Ok(SeifertSpec { m, n })
    }
}

/// `β_k = 2 cos(2πk/n)`.
pub fn beta(n: u32, k: u32) -> f64 {
    2.0 * (TAU * k as f64 / n as f64).cos()
}

/// `γ_l = 2 cos(2πl/m)`.
pub fn gamma(m: u32, l: u32) -> f64 {
    2.0 * (TAU * l as f64 / m as f64).cos()
}

/// `0 < k ≤ n/2`, `0 < l ≤ m/2` and `β_k² + γ_l² > 4`.
pub fn admissible(m: u32, n: u32, k: u32, l: u32) -> bool {
    let (b, g) = (beta(n, k), gamma(m, l));
    k > 0 && l > 0 && 2 * k <= n && 2 * l <= m && b * b + g * g > 4.0 + ADMISSIBLE_MARGIN
}

fn word(s: &str) -> Word {
    Word::parse(s).expect("catalog words are well formed")
}

/// `<x, y | y^n (xy)^-2, x^m (yx)^-2>` with `x = x1`, `y = x2`, closed by
/// the 3-cell with boundary `(1 - y) r_1 + (1 - x) r_2`.
pub fn seifert(m: u32, n: u32) -> Result<ManifoldData, CatalogError> {
    SeifertSpec::new(m, n)?;
    let xy2 = word("x1 x2 x1 x2").inverse();
    let yx2 = word("x2 x1 x2 x1").inverse();
    let r1 = word("x2").pow(n as i32).mul(&xy2);
    let r2 = word("x1").pow(m as i32).mul(&yx2);
    let pres = Presentation::new(2, vec![r1, r2])?;
    let d3 = vec![GroupRingElt::one_minus(word("x2")), GroupRingElt::one_minus(word("x1"))];
    let chain = ChainData::closed(&pres, d3.clone())?;
    Ok(ManifoldData {
        name: format!("M({m},{n})"),
        presentation: pres,
        chain,
        genus: 2,
        top_cell: Some(d3.into_iter().enumerate().map(|(j, a)| (a, j)).collect()),
    })
}

/// A catalogued representation `f_{k,l}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeifertRep {
    pub k: u32,
    pub l: u32,
    pub rep: Rep<f64>,
}

/// `f_{k,l}`: `y -> -Y`, `xy -> J`, where `Y` is the displayed matrix of
/// trace `β_k` and `J = [[0,-1],[1,0]]`. The sign on `Y` makes both relators
/// hold in `SL_2(R)` rather than only in `PSL_2(R)`.
pub fn seifert_rep(m: u32, n: u32, k: u32, l: u32) -> Result<Rep<f64>, CatalogError> {
    SeifertSpec::new(m, n)?;
    if !admissible(m, n, k, l) {
        return Err(CatalogError::Inadmissible { m, n, k, l });
    }
    let (b, g) = (beta(n, k), gamma(m, l));
    let s = (b * b + g * g - 4.0).sqrt();
    let y = Mat2::new(b / 2.0, (-g + s) / 2.0, (g + s) / 2.0, b / 2.0).neg();
    let xy = Mat2::new(0.0, -1.0, 1.0, 0.0);
    Ok(Rep::sl2r(vec![xy * y.inverse(), y]))
}

/// Every admissible `(k, l)` with its representation, in lexicographic order.
pub fn seifert_reps(m: u32, n: u32) -> Result<Vec<SeifertRep>, CatalogError> {
    SeifertSpec::new(m, n)?;
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        for l in 1..=m / 2 {
            if admissible(m, n, k, l) {
                out.push(SeifertRep { k, l, rep: seifert_rep(m, n, k, l)? });
            }
        }
    }
    Ok(out)
}

/// Closed form `4 / ((2 - β_k)(2 - γ_l))`.
pub fn seifert_torsion_closed(m: u32, n: u32, k: u32, l: u32) -> Result<f64, CatalogError> {
    SeifertSpec::new(m, n)?;
    if !admissible(m, n, k, l) {
        return Err(CatalogError::Inadmissible { m, n, k, l });
    }
    Ok(4.0 / ((2.0 - beta(n, k)) * (2.0 - gamma(m, l))))
}

/// Torsion of the `F^2`-twisted cochain complex of `M_{m,n}` at `f_{k,l}`.
pub fn seifert_torsion_computed(m: u32, n: u32, k: u32, l: u32, eps: f64) -> Result<f64, CatalogError> {
    let data = seifert(m, n)?;
    let rho = seifert_rep(m, n, k, l)?;
    let c = twisted_cochain_complex(&data.chain, &rho, CoefficientKind::Standard2, eps)?;
    Ok(compute_torsion(&c, eps).map_err(local_systems::LocalError::from)?)
}
