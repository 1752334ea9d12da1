//! The `SL_2(R)`-Casson invariant of a rational homology sphere, computed as
//! `Σ_f sign τ⁰_f(M)` over transversal Zariski-dense representations, and its
//! refinements graded by the Chern-Simons pairing or by the torsion value.

mod graded;

pub use graded::{GradedInvariant, Grading, GRADE_TOLERANCE};

use bar_chains::{build_fundamental_class, pairing_24p1, BarError};
use local_systems::{real_cochain_complex, transversality_check, twisted_cochain_complex, CoefficientKind, LocalError};
use manifold_catalog::ManifoldData;
use serde_json::{json, Value};
use sl2_reps::Rep;
use torsion_core::{refined_torsion_with_parity, TorsionError};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CassonError {
    #[error("representation {index} is not transversal")]
    NotTransversal { index: usize },
    #[error("the manifold has no fundamental-class data")]
    MissingFundamentalClass,
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Bar(#[from] BarError),
}

/// `τ⁰_f(M)`: the adjoint torsion signed by the real torsion, with `H^0` and
/// `H^3` of the real complex based by the unit cochains and `N(M) = g`.
pub fn refined_adjoint_torsion(md: &ManifoldData, rho: &Rep<f64>, eps: f64) -> Result<f64, CassonError> {
    let real = real_cochain_complex(&md.chain)?;
    let top = real.len() - 1;
    let h: Vec<Vec<Vec<f64>>> =
        (0..real.len()).map(|i| if i == 0 || i == top { vec![vec![1.0]] } else { Vec::new() }).collect();
    let real = real.with_cohomology(h)?;
    let twisted = twisted_cochain_complex(&md.chain, rho, CoefficientKind::Adjoint3, eps)?;
    Ok(refined_torsion_with_parity(&real, &twisted, (md.genus % 2) as u8, eps)?)
}

fn checked_torsion(md: &ManifoldData, rho: &Rep<f64>, index: usize, eps: f64) -> Result<f64, CassonError> {
    if !transversality_check(&md.presentation, &md.chain, rho, eps)? {
        return Err(CassonError::NotTransversal { index });
    }
    refined_adjoint_torsion(md, rho, eps)
}

fn sign(x: f64) -> i64 {
    if x < 0.0 {
        -1
    } else {
        1
    }
}

/// `ε_f = (-1)^g sign τ⁰_f(M)`.
pub fn epsilon_f(md: &ManifoldData, rho: &Rep<f64>, eps: f64) -> Result<i8, CassonError> {
    let t = checked_torsion(md, rho, 0, eps)?;
    let parity = if md.genus % 2 == 0 { 1 } else { -1 };
    Ok((parity * sign(t)) as i8)
}

/// `λ_{SL_2(R)}(M) = Σ_f sign τ⁰_f(M)`.
pub fn lambda_sl2r(md: &ManifoldData, reps: &[Rep<f64>], eps: f64) -> Result<i64, CassonError> {
    reps.iter().enumerate().map(|(i, r)| Ok(sign(checked_torsion(md, r, i, eps)?))).sum()
}

/// `24 l(f_* O'_M)` for one representation.
pub fn cs24(md: &ManifoldData, rho: &Rep<f64>, eps: f64) -> Result<f64, CassonError> {
    let top = md.top_cell.as_ref().ok_or(CassonError::MissingFundamentalClass)?;
    let o = build_fundamental_class(&md.presentation, top, rho)?;
    Ok(pairing_24p1(&md.presentation, &o, rho, eps)?.value())
}

/// `Σ_f ε_f [grade(f)]`.
pub fn graded_lambda(
    md: &ManifoldData,
    reps: &[Rep<f64>],
    grading: Grading,
    eps: f64,
) -> Result<GradedInvariant, CassonError> {
    if grading == Grading::Cs24 && md.top_cell.is_none() {
        return Err(CassonError::MissingFundamentalClass);
    }
    let parity = if md.genus % 2 == 0 { 1 } else { -1 };
    let mut out = GradedInvariant::new(grading);
    for (i, r) in reps.iter().enumerate() {
        let t = checked_torsion(md, r, i, eps)?;
        let grade = match grading {
            Grading::Cs24 => cs24(md, r, eps)?,
            Grading::TorsionValue => t,
        };
        out.add(grade, parity * sign(t));
    }
    Ok(out)
}

/// Everything known about one representation.
#[derive(Clone, Debug, PartialEq)]
pub struct RepReport {
    pub label: Option<(u32, u32)>,
    pub epsilon: i8,
    pub torsion: f64,
    pub cs24: Option<f64>,
}

/// Per-representation data for a labelled family.
pub fn rep_reports(
    md: &ManifoldData,
    reps: &[(Option<(u32, u32)>, Rep<f64>)],
    eps: f64,
) -> Result<Vec<RepReport>, CassonError> {
    let parity = if md.genus % 2 == 0 { 1 } else { -1 };
    reps.iter()
        .enumerate()
        .map(|(i, (label, r))| {
            let torsion = checked_torsion(md, r, i, eps)?;
            let cs = if md.top_cell.is_some() { Some(cs24(md, r, eps)?) } else { None };
            Ok(RepReport { label: *label, epsilon: (parity * sign(torsion)) as i8, torsion, cs24: cs })
        })
        .collect()
}

/// `{"manifold", "lambda", "graded": [{"grade", "coeff"}], "per_rep": [...]}`.
pub fn report_json(md: &ManifoldData, lambda: i64, graded: &GradedInvariant, per_rep: &[RepReport]) -> Value {
    let graded: Vec<Value> = graded.terms().iter().map(|&(g, c)| json!({"grade": g, "coeff": c})).collect();
    let per_rep: Vec<Value> = per_rep
        .iter()
        .map(|r| {
            json!({
                "k": r.label.map(|l| l.0),
                "l": r.label.map(|l| l.1),
                "epsilon": r.epsilon,
                "torsion": r.torsion,
                "cs24": r.cs24,
            })
        })
        .collect();
    json!({"manifold": md.name, "lambda": lambda, "graded": graded, "per_rep": per_rep})
}
