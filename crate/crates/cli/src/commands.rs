use anyhow::{anyhow, bail, Context, Result};
use casson_invariants::{
    epsilon_f, graded_lambda, lambda_sl2r, refined_adjoint_torsion, rep_reports, report_json, Grading,
};
use clap::ValueEnum;
use local_systems::{check_relators, LocalError, RELATOR_EPS};
use manifold_catalog::{abelianization_order, brieskorn, brieskorn_count, seifert, seifert_reps};
use scalar_matrix::{rat, Matrix, Rational, RealScalar, Scalar};
use serde_json::{json, Value};
use sl2_reps::{zariski_dense_check, Rep};
use torsion_core::{compute_torsion, BasedComplex};

use crate::config::{Backend, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Cs24,
    Torsion,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Cs24 => Grading::Cs24,
            GradingArg::Torsion => Grading::TorsionValue,
        }
    }
}

/// Per-representation data, `λ` and the graded invariant of `M_{m,n}`.
pub fn seifert_report(m: u32, n: u32, grading: GradingArg, eps: f64) -> Result<Value> {
    let md = seifert(m, n)?;
    let family = seifert_reps(m, n)?;
    let labelled: Vec<(Option<(u32, u32)>, Rep<f64>)> =
        family.iter().map(|r| (Some((r.k, r.l)), r.rep.clone())).collect();
    let reps: Vec<Rep<f64>> = family.into_iter().map(|r| r.rep).collect();
    let per_rep = rep_reports(&md, &labelled, eps)?;
    let lambda = lambda_sl2r(&md, &reps, eps)?;
    let graded = graded_lambda(&md, &reps, grading.into(), eps)?;
    let mut v = report_json(&md, lambda, &graded, &per_rep);
    v["grading"] = json!(match grading {
        GradingArg::Cs24 => "cs24",
        GradingArg::Torsion => "torsion",
    });
    Ok(v)
}

/// The count formula for `Σ(m,p,q)` and, given a representation, its
/// relator and density checks with the refined torsion.
pub fn brieskorn_report(m: u32, p: u32, q: u32, rep_json: Option<&str>, eps: f64) -> Result<Value> {
    let md = brieskorn(m, p, q)?;
    let count = brieskorn_count(m, p, q)?;
    let mut v = json!({
        "manifold": md.name,
        "count": count,
        "h1_order": abelianization_order(&md.presentation),
    });
    if let Some(text) = rep_json {
        let rho = Rep::from_json(text).context("parsing representation")?;
        if rho.gens() != md.presentation.gens() {
            bail!("representation has {} generators, the presentation has {}", rho.gens(), md.presentation.gens());
        }
        match check_relators(&md.presentation, &rho, RELATOR_EPS.max(eps)) {
            Err(LocalError::RelatorViolated { index, residual }) => {
                bail!("representation violates relator r{} (residual {residual:e})", index + 1)
            }
            other => other?,
        }
        let dense = zariski_dense_check(rho.images(), eps);
        let tau = refined_adjoint_torsion(&md, &rho, eps)?;
        v["rep"] = json!({
            "relators_ok": true,
            "dense": dense,
            "torsion": tau,
            "sign": if tau > 0.0 { 1 } else { -1 },
            "epsilon": epsilon_f(&md, &rho, eps)?,
        });
    }
    Ok(v)
}

/// Torsion of a complex given as `{"dims": [...], "maps": [rows...],
/// "cohomology": [[vector...] per degree]}` (cohomology optional). Exact
/// entries may be integers or `"p/q"` strings.
pub fn torsion_report(text: &str, cfg: &RunConfig) -> Result<Value> {
    let raw: Value = serde_json::from_str(text).context("complex file is not JSON")?;
    let dims: Vec<usize> = serde_json::from_value(raw.get("dims").cloned().ok_or_else(|| anyhow!("missing dims"))?)
        .context("dims must be a list of sizes")?;
    match cfg.backend {
        Backend::Float => {
            let c = parse_complex::<f64>(&raw, &dims, &parse_float)?;
            let t = compute_torsion(&c, cfg.eps)?;
            Ok(json!({"backend": "float", "dims": dims, "torsion": t}))
        }
        Backend::Exact => {
            let c = parse_complex::<Rational>(&raw, &dims, &parse_rational)?;
            let t = compute_torsion(&c, 0.0)?;
            Ok(json!({"backend": "exact", "dims": dims, "torsion": t.to_f64(), "torsion_exact": t.to_string()}))
        }
    }
}

fn parse_float(v: &Value) -> Result<f64> {
    v.as_f64().ok_or_else(|| anyhow!("expected a number, got {v}"))
}

fn parse_rational(v: &Value) -> Result<Rational> {
    if let Some(i) = v.as_i64() {
        return Ok(rat(i, 1));
    }
    let s = v.as_str().ok_or_else(|| anyhow!("exact entries are integers or \"p/q\" strings, got {v}"))?;
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let (num, den): (i64, i64) = (num.trim().parse()?, den.trim().parse()?);
    if den == 0 {
        bail!("zero denominator in {s}");
    }
    Ok(rat(num, den))
}

fn parse_complex<T: Scalar>(raw: &Value, dims: &[usize], entry: &dyn Fn(&Value) -> Result<T>) -> Result<BasedComplex<T>> {
    let maps = raw.get("maps").and_then(Value::as_array).ok_or_else(|| anyhow!("missing maps"))?;
    let mut mats = Vec::with_capacity(maps.len());
    for (i, m) in maps.iter().enumerate() {
        let rows = m.as_array().ok_or_else(|| anyhow!("map {i} is not a list of rows"))?;
        let rows: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.as_array().ok_or_else(|| anyhow!("map {i}: bad row"))?.iter().map(entry).collect())
            .collect::<Result<_>>()?;
        let (r, c) = (dims.get(i + 1).copied().unwrap_or(0), dims.get(i).copied().unwrap_or(0));
        let mat = if rows.is_empty() { Matrix::zeros(r, c) } else { Matrix::from_rows(&rows)? };
        mats.push(mat);
    }
    let mut c = BasedComplex::new(dims.to_vec(), mats)?;
    if let Some(h) = raw.get("cohomology").and_then(Value::as_array) {
        let h: Vec<Vec<Vec<T>>> = h
            .iter()
            .map(|deg| {
                deg.as_array()
                    .ok_or_else(|| anyhow!("cohomology entries are lists of vectors"))?
                    .iter()
                    .map(|vec| vec.as_array().ok_or_else(|| anyhow!("bad vector"))?.iter().map(entry).collect())
                    .collect()
            })
            .collect::<Result<_>>()?;
        c = c.with_cohomology(h)?;
    }
    Ok(c)
}
