//! One PASS/FAIL line per acceptance criterion. Runs as a plain program so the
//! lines always show in `cargo test` output; it reports and never aborts.

use std::time::{Duration, Instant};

use casson_cli::{brieskorn_catalog, run_suite, seifert_catalog, seifert_report, GradingArg, DEFAULT_EPS};
use casson_invariants::{epsilon_f, lambda_sl2r};
use chern_simons::ModOne;
use manifold_catalog::{brieskorn_count, seifert, seifert_reps, seifert_torsion_closed, seifert_torsion_computed};
use sl2_reps::zariski_dense_check;
use symplectic_forms::{
    default_sl2r_pair, doubled_rep, predicted_surface_torsion, su2_f0, surface_refined_torsion, SurfaceData,
};
use torsion_core::n_parity;

const EPS: f64 = DEFAULT_EPS;

fn line(n: usize, title: &str, ok: bool, detail: String) -> bool {
    println!("criterion {n} {:<4} {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

/// Every expected value is matched by a distinct computed one within `tol` mod 1.
fn matches_mod_one(expected: &[f64], computed: &[f64], tol: f64) -> (bool, f64) {
    let mut free: Vec<f64> = computed.to_vec();
    let mut worst = 0.0f64;
    for &e in expected {
        let best = free
            .iter()
            .enumerate()
            .map(|(i, &c)| (i, ModOne::new(c).dist(ModOne::new(e))))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, d)) => {
                worst = worst.max(d);
                free.remove(i);
            }
            None => return (false, f64::INFINITY),
        }
    }
    (worst < tol && free.is_empty(), worst)
}

fn criterion_1() -> bool {
    let table: &[(u32, u32, &[f64])] = &[
        (3, 7, &[0.100637]),
        (3, 9, &[0.826310]),
        (3, 11, &[0.660662]),
        (3, 13, &[0.549320]),
        (3, 15, &[0.950164]),
        (5, 7, &[0.562345, 0.275253]),
        (5, 9, &[0.906666, 0.979077]),
        (5, 11, &[0.658563, 0.456043, 0.111275, 0.942540]),
    ];
    let (mut ok, mut worst, mut slowest) = (true, 0.0f64, Duration::ZERO);
    let mut misses = Vec::new();
    for &(m, n, want) in table {
        let start = Instant::now();
        let report = match seifert_report(m, n, GradingArg::Cs24, EPS) {
            Ok(r) => r,
            Err(e) => return line(1, "Seifert pairing tables", false, format!("M({m},{n}) errored: {e:#}")),
        };
        slowest = slowest.max(start.elapsed());
        let got: Vec<f64> =
            report["per_rep"].as_array().unwrap().iter().map(|r| r["cs24"].as_f64().unwrap()).collect();
        let (hit, w) = matches_mod_one(want, &got, 1e-4);
        worst = worst.max(w);
        if !hit {
            ok = false;
            misses.push(format!("M({m},{n}) got {got:.6?}"));
        }
    }
    ok &= slowest < Duration::from_secs(10);
    let detail = format!("worst mod-1 gap {worst:.3e} (tol 1e-4), slowest {:.2?}; {}", slowest, misses.join("; "));
    line(1, "Seifert pairing tables", ok, detail)
}

fn criterion_2() -> bool {
    let (mut worst, mut count) = (0.0f64, 0);
    for (m, n) in seifert_catalog() {
        for r in seifert_reps(m, n).unwrap() {
            let closed = seifert_torsion_closed(m, n, r.k, r.l).unwrap();
            let computed = seifert_torsion_computed(m, n, r.k, r.l, EPS).unwrap();
            worst = worst.max((computed - closed).abs() / closed.abs());
            count += 1;
        }
    }
    line(2, "closed-form torsion", worst < 1e-8, format!("{count} reps, worst relative error {worst:.3e} (tol 1e-8)"))
}

fn criterion_3() -> bool {
    let (mut ok, mut count) = (true, 0);
    for (m, n) in seifert_catalog() {
        let md = seifert(m, n).unwrap();
        let reps: Vec<_> = seifert_reps(m, n).unwrap().into_iter().map(|r| r.rep).collect();
        for rho in &reps {
            ok &= epsilon_f(&md, rho, EPS).unwrap() == -1;
        }
        ok &= lambda_sl2r(&md, &reps, EPS).unwrap() == -(reps.len() as i64);
        count += reps.len();
    }
    line(3, "epsilon and lambda", ok, format!("{count} reps over {} manifolds", seifert_catalog().len()))
}

/// Triple loop over `0 < s < m, 0 < t < p, 0 < u < q` in integer arithmetic.
fn count_oracle(m: u32, p: u32, q: u32) -> i64 {
    let (m, p, q) = (m as i64, p as i64, q as i64);
    let mut lattice = 0;
    for s in 1..m {
        for t in 1..p {
            for u in 1..q {
                if s * p * q + t * m * q + u * m * p < m * p * q {
                    lattice += 1;
                }
            }
        }
    }
    (m - 1) * (p - 1) * (q - 1) / 4 - 2 * lattice
}

fn criterion_4() -> bool {
    let specs = brieskorn_catalog(13);
    let agree = specs.iter().filter(|&&(m, p, q)| brieskorn_count(m, p, q).unwrap() == count_oracle(m, p, q)).count();
    let s345 = brieskorn_count(3, 4, 5).unwrap();
    let ok = agree == specs.len() && s345 == 2;
    line(4, "Brieskorn count", ok, format!("{agree}/{} specs agree with enumeration, Sigma(3,4,5) -> {s345}", specs.len()))
}

fn criterion_5() -> bool {
    let sd = SurfaceData::new(2).unwrap();
    let (a, b) = default_sl2r_pair();
    let mut sl = Vec::new();
    let mut dense = true;
    for t in [0.0, 0.3, 0.7, 1.2] {
        let rho = doubled_rep(a, b, t).unwrap();
        dense &= zariski_dense_check(rho.images(), EPS);
        sl.push(surface_refined_torsion(&rho, &sd, EPS).unwrap());
    }
    let su = surface_refined_torsion(&su2_f0(), &sd, EPS).unwrap();
    let predicted = predicted_surface_torsion(2);

    // one constant for all representations, fixed from the SL_2(R) family
    let factors: Vec<f64> = sl.iter().map(|s| s.calibration_factor()).chain([su.calibration_factor()]).collect();
    let k = sl.iter().map(|s| s.calibration_factor()).sum::<f64>() / sl.len() as f64;
    let factor_spread = factors.iter().map(|f| (f - k).abs() / k).fold(0.0, f64::max);

    let calibrated: Vec<f64> = sl.iter().map(|s| s.value / k).collect();
    let spread = calibrated.iter().map(|v| (v - calibrated[0]).abs()).fold(0.0, f64::max);
    let sl_ok = dense && calibrated.iter().all(|v| (v - predicted).abs() < 1e-6) && spread < 1e-8;
    let su_val = su.value / k;
    let su_ok = (su_val.re - 1.0).abs() < 1e-6 && su_val.im.abs() < 1e-6;
    let detail = format!(
        "calibration constant {k:.10} (spread {factor_spread:.1e}); SL2R {:.10} (spread {spread:.1e}, dense {dense}) {}; SU(2) f0 {:.10} vs 1 {}",
        calibrated[0],
        if sl_ok { "ok" } else { "bad" },
        su_val.re,
        if su_ok { "ok" } else { "bad" },
    );
    line(5, "surface torsion", sl_ok && su_ok && factor_spread < 1e-8, detail)
}

fn criterion_6() -> bool {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["cocycle", "milnor", "pivots", "rebase", "catalog", "fundamental", "conjugation"] {
        let r = run_suite(name, 2024, EPS).unwrap();
        ok &= r.all_passed();
        for c in &r.checks {
            if !c.all_passed() {
                parts.push(format!("{name}/{} {}/{}", c.name, c.passed, c.total));
            }
        }
    }
    let detail = if parts.is_empty() { "all suites pass".to_string() } else { format!("failing: {}", parts.join(", ")) };
    line(6, "property suites", ok, detail)
}

fn criterion_7() -> bool {
    let circle = n_parity(&[1, 1], &[1, 1]).unwrap();
    let disk = n_parity(&[1, 1, 1], &[1, 0, 0]).unwrap();
    let surfaces: Vec<u8> = (1..=4).map(|g| n_parity(&[1, 2 * g, 1], &[1, 2 * g, 1]).unwrap()).collect();
    let closed: Vec<u8> = (1..=4).map(|g| n_parity(&[1, g, g, 1], &[1, 0, 0, 1]).unwrap()).collect();
    let ok = circle == 1
        && disk == 1
        && surfaces.iter().all(|&s| s == 0)
        && closed.iter().zip(1..).all(|(&c, g)| c as usize == g % 2);
    line(7, "N(X) values", ok, format!("S1 {circle}, D {disk}, surfaces {surfaces:?}, closed M for g=1..4 {closed:?}"))
}

fn main() {
    let results = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6(), criterion_7()];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
}
