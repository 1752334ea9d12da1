//! Named property suites run by `check`.

use anyhow::{bail, Result};
use bar_chains::{build_fundamental_class, chain_map_c1_vec, chain_map_c2, chain_map_c2_sum, evaluate_keys};
use casson_invariants::{cs24, refined_adjoint_torsion};
use chern_simons::{cocycle_l_real, cross_ratio, ModOne};
use fox_words::{fox_derivative, GroupRingElt, Presentation, Word};
use local_systems::{twisted_cochain_complex, CoefficientKind};
use manifold_catalog::{brieskorn, seifert, seifert_reps, BrieskornSpec, ManifoldData, SeifertSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_matrix::{independent_columns_in_order, inverse, Matrix, Rational, RealScalar};
use serde_json::{json, Value};
use sl2_reps::{mobius_act, mobius_point, Mat2, ProjPoint, Rep};
use torsion_core::{compute_torsion, compute_torsion_with_pivots, les_torsion_and_eta, rebase_torsion, BasedComplex, BasisChange};

use crate::random::{random_complex, random_dims, random_invertible, random_short_exact, random_sl2, with_default_h};

pub const SUITES: &[&str] =
    &["cocycle", "milnor", "cross-ratio", "fox", "pivots", "rebase", "catalog", "fundamental", "conjugation"];

/// Pass count for one property.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    /// Largest defect seen, for numerical properties.
    pub worst: Option<f64>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.into(), passed: 0, total: 0, worst: None }
    }

    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += ok as usize;
    }

    fn defect(&mut self, d: f64, tol: f64) {
        self.worst = Some(self.worst.map_or(d, |w| w.max(d)));
        self.record(d < tol);
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::all_passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "total": c.total, "worst": c.worst}))
            .collect();
        json!({"suite": self.suite, "seed": self.seed, "checks": checks, "ok": self.all_passed()})
    }
}

pub fn run_suite(name: &str, seed: u64, eps: f64) -> Result<SuiteReport> {
    let checks = match name {
        "cocycle" => cocycle(seed),
        "milnor" => milnor(seed)?,
        "cross-ratio" => cross_ratios(seed)?,
        "fox" => fox(seed),
        "pivots" => pivots(seed)?,
        "rebase" => rebase(seed)?,
        "catalog" => catalog(eps)?,
        "fundamental" => fundamental()?,
        "conjugation" => conjugation(seed, eps)?,
        other => bail!("unknown suite {other:?}; known suites: {}", SUITES.join(", ")),
    };
    Ok(SuiteReport { suite: name.into(), seed, checks })
}

/// Odd `(m, n)` up to 11 with `1/m + 1/n < 1/2`.
pub fn seifert_catalog() -> Vec<(u32, u32)> {
    let odd = [3u32, 5, 7, 9, 11];
    odd.iter().flat_map(|&m| odd.iter().map(move |&n| (m, n))).filter(|&(m, n)| SeifertSpec::new(m, n).is_ok()).collect()
}

/// Valid Brieskorn triples with entries up to `max`.
pub fn brieskorn_catalog(max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 3..=max {
        for p in 3..=max {
            for q in 2..=max {
                if BrieskornSpec::new(m, p, q).is_ok() {
                    out.push((m, p, q));
                }
            }
        }
    }
    out
}

fn catalog_reps() -> Result<Vec<(ManifoldData, Rep<f64>)>> {
    let mut out = Vec::new();
    for (m, n) in seifert_catalog() {
        let md = seifert(m, n)?;
        for r in seifert_reps(m, n)? {
            out.push((md.clone(), r.rep));
        }
    }
    Ok(out)
}

fn min_gap(points: &[ProjPoint]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            gap = gap.min(points[i].chordal(&points[j]));
        }
    }
    gap
}

/// Coboundary of `scale · l` on a 4-simplex, as a distance from 0 mod 1.
pub fn cocycle_defect(g: &[Mat2<f64>], scale: f64) -> f64 {
    let mut s = 0.0;
    for i in 0..5 {
        let face: Vec<&Mat2<f64>> = g.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, m)| m).collect();
        let v = scale * cocycle_l_real([face[0], face[1], face[2], face[3]]);
        s += if i % 2 == 0 { v } else { -v };
    }
    ModOne::new(s).dist(ModOne::zero())
}

fn cocycle(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut plain, mut scaled) = (Check::new("l mod 1"), Check::new("24 l mod 1"));
    while plain.total < 1000 {
        let g: Vec<Mat2<f64>> = (0..5).map(|_| random_sl2(&mut rng)).collect();
        let pts: Vec<ProjPoint> = g.iter().map(mobius_point).collect();
        if min_gap(&pts) <= 1e-3 {
            continue;
        }
        plain.defect(cocycle_defect(&g, 1.0), 1e-6);
        scaled.defect(cocycle_defect(&g, 24.0), 1e-6);
    }
    vec![plain, scaled]
}

fn milnor(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut stated, mut corrected) = (Check::new("eta as stated"), Check::new("eta corrected"));
    for _ in 0..200 {
        let s = random_short_exact(&mut rng);
        let r = les_torsion_and_eta(&s, 0.0, 0.0)?;
        stated.record(r.holds_stated);
        corrected.record(r.holds_corrected);
    }
    Ok(vec![stated, corrected])
}

fn cross_ratios(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inv = Check::new("mobius invariance");
    let mut sym = Check::new("double transposition");
    while inv.total < 1000 {
        let pts: Vec<ProjPoint> = (0..4).map(|_| ProjPoint::Finite(rng.gen_range(-5.0..5.0))).collect();
        let g = random_sl2(&mut rng);
        let moved: Vec<ProjPoint> = pts.iter().map(|p| mobius_act(&g, *p)).collect();
        if min_gap(&pts) < 1e-2 || min_gap(&moved) < 1e-2 {
            continue;
        }
        let a = cross_ratio([pts[0], pts[1], pts[2], pts[3]])?;
        let b = cross_ratio([moved[0], moved[1], moved[2], moved[3]])?;
        inv.defect((a - b).abs() / a.abs().max(1.0), 1e-8);
        let c = cross_ratio([pts[1], pts[0], pts[3], pts[2]])?;
        sym.defect((a - c).abs() / a.abs().max(1.0), 1e-12);
    }
    Ok(vec![inv, sym])
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, len: usize) -> Word {
    let raw: Vec<(usize, i32)> = (0..len).map(|_| (rng.gen_range(1..=gens), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    Word::from_letters(raw).expect("generators are positive")
}

fn fox(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut fundamental, mut product) = (Check::new("fundamental formula"), Check::new("product rule"));
    for _ in 0..500 {
        let gens = rng.gen_range(1..=4);
        let len = rng.gen_range(0..20);
        let w = random_word(&mut rng, gens, len);
        let mut lhs = GroupRingElt::zero();
        for i in 1..=gens {
            let xi_minus_1 = &GroupRingElt::from_word(Word::gen(i)) - &GroupRingElt::one();
            lhs = &lhs + &(&fox_derivative(&w, i) * &xi_minus_1);
        }
        fundamental.record(lhs == &GroupRingElt::from_word(w.clone()) - &GroupRingElt::one());

        let len = rng.gen_range(0..12);
        let v = random_word(&mut rng, gens, len);
        let i = rng.gen_range(1..=gens);
        let rhs = &fox_derivative(&w, i) + &fox_derivative(&v, i).left_mul_word(&w);
        product.record(fox_derivative(&w.mul(&v), i) == rhs);
    }
    vec![fundamental, product]
}

fn to_float(c: &BasedComplex<Rational>) -> Result<BasedComplex<f64>> {
    let maps = c.coboundaries().iter().map(|d| d.map(|x| x.to_f64())).collect();
    let h = (0..c.len()).map(|i| c.cohomology(i).iter().map(|v| v.iter().map(|x| x.to_f64()).collect()).collect()).collect();
    Ok(BasedComplex::new(c.dims().to_vec(), maps)?.with_cohomology(h)?)
}

fn pivots(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut exact, mut float) = (Check::new("exact pivot independence"), Check::new("float pivot independence"));
    for _ in 0..30 {
        let dims = random_dims(&mut rng, 2..=4, 4);
        let c = with_default_h(random_complex(&mut rng, &dims));
        let cf = to_float(&c)?;
        let t = compute_torsion(&c, 0.0)?;
        let tf = t.to_f64();
        for _ in 0..10 {
            let piv: Vec<Vec<usize>> = c
                .coboundaries()
                .iter()
                .map(|d| {
                    let mut order: Vec<usize> = (0..d.cols()).collect();
                    order.shuffle(&mut rng);
                    independent_columns_in_order(d, &order, 0.0)
                })
                .collect::<Result<_, _>>()?;
            exact.record(compute_torsion_with_pivots(&c, 0.0, &piv)? == t);
            let got = compute_torsion_with_pivots(&cf, 1e-9, &piv)?;
            float.defect((got - tf).abs() / tf.abs(), 1e-8);
        }
    }
    Ok(vec![exact, float])
}

fn rebase(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut law = Check::new("change of basis law");
    for _ in 0..40 {
        let dims = random_dims(&mut rng, 2..=4, 3);
        let c = with_default_h(random_complex(&mut rng, &dims));
        let t = compute_torsion(&c, 0.0)?;
        let qs: Vec<Matrix<Rational>> = dims.iter().map(|&n| random_invertible(&mut rng, n)).collect();
        let qinv: Vec<Matrix<Rational>> = qs.iter().map(|m| inverse(m, 0.0)).collect::<Result<_, _>>()?;
        let (mut changes, mut new_h) = (Vec::new(), Vec::new());
        for i in 0..dims.len() {
            let h = c.cohomology(i);
            let a = random_invertible(&mut rng, h.len());
            let h2 = Matrix::from_columns(dims[i], h)?.matmul(&a)?;
            new_h.push((0..h.len()).map(|k| qinv[i].mul_vec(&h2.column(k))).collect::<Result<Vec<_>, _>>()?);
            changes.push(BasisChange { c: Some(qinv[i].clone()), h: Some(a.transpose()) });
        }
        let maps = (0..dims.len() - 1)
            .map(|i| qinv[i + 1].matmul(c.coboundary(i))?.matmul(&qs[i]))
            .collect::<Result<Vec<_>, _>>()?;
        let c2 = BasedComplex::new(dims.clone(), maps)?.with_cohomology(new_h)?;
        law.record(rebase_torsion(t, &changes)? == compute_torsion(&c2, 0.0)?);
    }
    Ok(vec![law])
}

/// `∂ c_2(1, r) + (1, r) = c_1(∂r/∂x_*)`, the commuting square in degree 2.
fn square_commutes(p: &Presentation, r: &Word) -> bool {
    let fox: Vec<GroupRingElt> = (1..=p.gens()).map(|i| fox_derivative(r, i)).collect();
    let Ok(mut lhs) = chain_map_c2(&Word::identity(), r).boundary() else {
        return false;
    };
    lhs.add_term(vec![Word::identity(), r.clone()], 1).is_ok() && lhs == chain_map_c1_vec(&fox)
}

fn catalog(eps: f64) -> Result<Vec<Check>> {
    let mut squares = Check::new("twisted complexes square to zero");
    for (md, rho) in catalog_reps()? {
        for kind in [CoefficientKind::Standard2, CoefficientKind::Adjoint3, CoefficientKind::Trivial1] {
            squares.record(twisted_cochain_complex(&md.chain, &rho, kind, eps).is_ok());
        }
    }
    let mut words = Check::new("chain map commutes (words)");
    let mut keys = Check::new("chain map commutes (matrices)");
    for (m, n) in seifert_catalog() {
        let md = seifert(m, n)?;
        for r in md.presentation.relators() {
            words.record(square_commutes(&md.presentation, r));
        }
        for rep in seifert_reps(m, n)? {
            for r in md.presentation.relators() {
                let fox: Vec<GroupRingElt> = (1..=2).map(|i| fox_derivative(r, i)).collect();
                let lhs = evaluate_keys(&chain_map_c2(&Word::identity(), r).boundary()?, &rep.rep)?;
                keys.record(lhs == evaluate_keys(&chain_map_c1_vec(&fox), &rep.rep)?);
            }
        }
    }
    for (m, p, q) in brieskorn_catalog(9) {
        let md = brieskorn(m, p, q)?;
        for r in md.presentation.relators() {
            words.record(square_commutes(&md.presentation, r));
        }
    }
    Ok(vec![squares, words, keys])
}

fn fundamental() -> Result<Vec<Check>> {
    let mut check = Check::new("boundary of O' equals c2 of the top cell");
    for (md, rho) in catalog_reps()? {
        let top = md.top_cell.as_ref().expect("catalog Seifert data has a top cell");
        let z = chain_map_c2_sum(top, md.presentation.relators())?;
        let ok = match build_fundamental_class(&md.presentation, top, &rho) {
            Ok(o) => evaluate_keys(&o, &rho)?.boundary()? == evaluate_keys(&z, &rho)?,
            Err(_) => false,
        };
        check.record(ok);
    }
    Ok(vec![check])
}

fn conjugation(seed: u64, eps: f64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut tau, mut cs) = (Check::new("refined torsion"), Check::new("cs pairing"));
    for (md, rho) in catalog_reps()? {
        let g = random_sl2(&mut rng);
        let conj = rho.conjugate(&g);
        let (a, b) = (refined_adjoint_torsion(&md, &rho, eps)?, refined_adjoint_torsion(&md, &conj, eps)?);
        tau.defect((a - b).abs() / a.abs(), 1e-8);
        let (x, y) = (cs24(&md, &rho, eps)?, cs24(&md, &conj, eps)?);
        cs.defect(ModOne::new(x).dist(ModOne::new(y)), 1e-8);
    }
    Ok(vec![tau, cs])
}
