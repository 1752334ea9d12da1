use fox_words::Word;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_matrix::Matrix;
use sl2_reps::{verify_relators, zariski_dense_check, Complex64, Mat2, Rep};
use symplectic_forms::*;

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn genus2_rep(t: f64) -> Rep<f64> {
    let (a, b) = default_sl2r_pair();
    doubled_rep(a, b, t).unwrap()
}

/// Genus 3: a genus-2 block followed by a commuting pair.
fn genus3_rep() -> Rep<f64> {
    let mut images = genus2_rep(0.4).images().to_vec();
    let h = Mat2::new(1.5, 0.7, 0.2, (1.0 + 0.14) / 1.5);
    images.push(h);
    images.push(h * h);
    Rep::sl2r(images)
}

fn random_cocycle<S: scalar_matrix::Scalar + Copy>(
    rho: &Rep<S>,
    sd: &SurfaceData,
    rng: &mut ChaCha8Rng,
) -> Vec<S> {
    let c = local_systems::twisted_cochain_complex(sd.chain(), rho, local_systems::CoefficientKind::Adjoint3, 1e-9)
        .unwrap();
    let z = scalar_matrix::kernel_basis(c.coboundary(1), 1e-9).unwrap();
    let mut v = vec![S::zero(); z[0].len()];
    for k in &z {
        let c = S::from_i64(rng.gen_range(-4..=4));
        for (x, y) in v.iter_mut().zip(k) {
            *x = *x + c * *y;
        }
    }
    v
}

fn coboundary(rho: &Rep<f64>, sd: &SurfaceData, x: &[f64]) -> Vec<f64> {
    let c = local_systems::twisted_cochain_complex(sd.chain(), rho, local_systems::CoefficientKind::Adjoint3, 1e-9)
        .unwrap();
    c.coboundary(0).mul_vec(x).unwrap()
}

#[test]
fn surface_presentation() {
    let sd = SurfaceData::new(2).unwrap();
    assert_eq!(sd.relator(), &w("x1 x2 x1^-1 x2^-1 x3 x4 x3^-1 x4^-1"));
    assert_eq!(sd.h1_dim(), 6);
    assert!(matches!(SurfaceData::new(1), Err(SymplecticError::Genus(1))));
    // Fundamental formula: Σ ∂r/∂x_s (x_s - 1) = r - 1.
    let sd3 = SurfaceData::new(3).unwrap();
    let mut lhs = fox_words::GroupRingElt::zero();
    for (s, d) in sd3.fox_row().iter().enumerate() {
        for (u, c) in d.terms() {
            lhs.add_term(u.mul(&Word::gen(s + 1)), c);
            lhs.add_term(u.clone(), -c);
        }
    }
    let mut rhs = fox_words::GroupRingElt::from_word(sd3.relator().clone());
    rhs.add_term(Word::identity(), -1);
    assert_eq!(lhs, rhs);
}

#[test]
fn upsilon_small_words() {
    let sd = SurfaceData::new(2).unwrap();
    assert!(upsilon(&w("x1"), &sd).unwrap().is_zero());
    assert!(upsilon(&Word::identity(), &sd).unwrap().is_zero());
    let u = upsilon(&w("x1 x2"), &sd).unwrap();
    assert_eq!(u.len(), 1);
    assert_eq!(u.coefficient(&Word::identity(), 1, &w("x1"), 2), 1);
    assert_eq!(u, kappa(&w("x1"), &w("x2"), 4));
    // Υ(a a^{-1}) = 0.
    assert!(upsilon(&w("x3"), &sd).unwrap().is_zero());
    let mut t = upsilon(&w("x3"), &sd).unwrap();
    t.add(&upsilon(&w("x3^-1"), &sd).unwrap().act(&w("x3")));
    t.add(&kappa(&w("x3"), &w("x3^-1"), 4));
    assert!(t.is_zero());
    assert!(matches!(
        upsilon(&w("x5"), &sd),
        Err(SymplecticError::ForeignGenerator { gen: 5, gens: 4 })
    ));
}

fn letters(raw: Vec<(usize, i32)>) -> Word {
    Word::from_letters(raw).unwrap()
}

proptest! {
    #[test]
    fn upsilon_cocycle_identity(
        u in prop::collection::vec((1usize..=4, prop::sample::select(vec![-1i32, 1])), 0..7),
        v in prop::collection::vec((1usize..=4, prop::sample::select(vec![-1i32, 1])), 0..7),
        x in prop::collection::vec((1usize..=4, prop::sample::select(vec![-1i32, 1])), 0..5),
    ) {
        let sd = SurfaceData::new(2).unwrap();
        let (u, v, x) = (letters(u), letters(v), letters(x));
        let mut split = upsilon(&u, &sd).unwrap();
        split.add(&upsilon(&v, &sd).unwrap().act(&u));
        split.add(&kappa(&u, &v, 4));
        prop_assert_eq!(upsilon(&u.mul(&v), &sd).unwrap(), split);

        // Both bracketings of u v x agree.
        let uv = u.mul(&v);
        let mut left = upsilon(&uv, &sd).unwrap();
        left.add(&upsilon(&x, &sd).unwrap().act(&uv));
        left.add(&kappa(&uv, &x, 4));
        let vx = v.mul(&x);
        let mut right = upsilon(&u, &sd).unwrap();
        right.add(&upsilon(&vx, &sd).unwrap().act(&u));
        right.add(&kappa(&u, &vx, 4));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn test_reps_are_valid_and_dense() {
    let sd = SurfaceData::new(2).unwrap();
    for t in [0.0, 0.3, 0.7] {
        let rho = genus2_rep(t);
        assert!(verify_relators(sd.presentation(), &rho, 1e-10));
        assert!(zariski_dense_check(rho.images(), 1e-9));
        let tr: Vec<f64> = rho.images().iter().map(|m| m.trace().abs()).collect();
        assert!(tr[0] > 2.0 && tr[1] < 2.0 && tr[2] < 2.0 && tr[3] > 2.0);
    }
    assert!(verify_relators(SurfaceData::new(3).unwrap().presentation(), &genus3_rep(), 1e-10));
    let f0 = su2_f0();
    assert!(verify_relators(sd.presentation(), &f0, 1e-12));
    for m in f0.images() {
        assert!((m.det() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn pairing_is_antisymmetric_and_kills_coboundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (rho, g) in [(genus2_rep(0.3), 2), (genus3_rep(), 3)] {
        let sd = SurfaceData::new(g).unwrap();
        for _ in 0..5 {
            let f = random_cocycle(&rho, &sd, &mut rng);
            let h = random_cocycle(&rho, &sd, &mut rng);
            let fh = cup_pairing(&f, &h, &rho, &sd, 1e-8).unwrap();
            let hf = cup_pairing(&h, &f, &rho, &sd, 1e-8).unwrap();
            assert!((fh + hf).abs() < 1e-8 * fh.abs().max(1.0), "{fh} {hf}");
            assert!(cup_pairing(&f, &f, &rho, &sd, 1e-8).unwrap().abs() < 1e-8);
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let d = coboundary(&rho, &sd, &x);
            assert!(cup_pairing(&f, &d, &rho, &sd, 1e-8).unwrap().abs() < 1e-8);
            assert!(cup_pairing(&d, &f, &rho, &sd, 1e-8).unwrap().abs() < 1e-8);
            // Bilinearity.
            let s: Vec<f64> = f.iter().zip(&d).map(|(a, b)| 2.0 * a - 3.0 * b).collect();
            let lhs = cup_pairing(&s, &h, &rho, &sd, 1e-8).unwrap();
            assert!((lhs - 2.0 * fh).abs() < 1e-8 * fh.abs().max(1.0));
        }
    }
}

#[test]
fn explicit_formula_agrees_with_upsilon_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.7);
    for _ in 0..5 {
        let f = random_cocycle(&rho, &sd, &mut rng);
        let h = random_cocycle(&rho, &sd, &mut rng);
        let a = cup_pairing(&f, &h, &rho, &sd, 1e-8).unwrap();
        let b = explicit_pairing(&f, &h, &rho, &sd).unwrap();
        assert!((a - b).abs() < 1e-8 * a.abs().max(1.0), "{a} vs {b}");
    }
    let f0 = su2_f0();
    for _ in 0..3 {
        let f = random_cocycle(&f0, &sd, &mut rng);
        let h = random_cocycle(&f0, &sd, &mut rng);
        let a = cup_pairing(&f, &h, &f0, &sd, 1e-8).unwrap();
        let b = explicit_pairing(&f, &h, &f0, &sd).unwrap();
        assert!((a - b).norm() < 1e-8 * a.norm().max(1.0));
    }
}

#[test]
fn non_cocycles_are_rejected() {
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.0);
    let mut f = vec![0.0; 12];
    f[0] = 1.0;
    assert!(matches!(cup_pairing(&f, &f, &rho, &sd, 1e-8), Err(SymplecticError::NotACocycle { .. })));
    assert!(matches!(cup_pairing(&f[..6], &f, &rho, &sd, 1e-8), Err(SymplecticError::Dimension { .. })));
}

#[test]
fn symplectic_basis_sl2r() {
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.3);
    let h = symplectic_basis(&rho, &sd, 1e-9).unwrap();
    assert_eq!(h.len(), 6);
    let form = CupForm::adjoint(&rho, &sd).unwrap();
    let g = gram_matrix(&form, &h).unwrap();
    assert!(symplectic_residual(&g) < 1e-8);
    for v in &h {
        assert!(form.cocycle_residual(v).unwrap() < 1e-9);
    }
}

#[test]
fn symplectic_basis_su2() {
    let sd = SurfaceData::new(2).unwrap();
    let rho = su2_f0();
    let h = symplectic_basis(&rho, &sd, 1e-9).unwrap();
    assert_eq!(h.len(), 6);
    let g = gram_matrix(&CupForm::adjoint(&rho, &sd).unwrap(), &h).unwrap();
    assert!(symplectic_residual(&g) < 1e-8);
}

#[test]
fn reducible_reps_are_rejected() {
    let sd = SurfaceData::new(2).unwrap();
    let d = |l: f64| Mat2::new(l, 0.0, 0.0, 1.0 / l);
    let rho = Rep::sl2r(vec![d(2.0), d(3.0), d(0.5), d(1.5)]);
    assert!(matches!(symplectic_basis(&rho, &sd, 1e-9), Err(SymplecticError::Reducible { .. })));
    assert!(surface_refined_torsion(&rho, &sd, 1e-9).is_err());
}

#[test]
fn gram_schmidt_reports_degeneracy() {
    let sd = SurfaceData::new(2).unwrap();
    let form = CupForm::trivial(&sd).unwrap();
    // a_1^* and a_2^* pair to zero with each other.
    let e = |k: usize| (0..4).map(|i| if i == k { 1.0 } else { 0.0 }).collect::<Vec<f64>>();
    assert!(matches!(
        symplectic_gram_schmidt(&form, vec![e(0), e(2)]),
        Err(SymplecticError::Degenerate { remaining: 2 })
    ));
    let basis = symplectic_gram_schmidt(&form, (0..4).map(e).collect()).unwrap();
    assert!(symplectic_residual(&gram_matrix(&form, &basis).unwrap()) < 1e-15);
}

#[test]
fn sl2r_surface_torsion_is_constant_on_a_component() {
    let sd = SurfaceData::new(2).unwrap();
    let mut values = Vec::new();
    for t in [0.0, 0.3, 0.7, 1.2] {
        let st = surface_refined_torsion(&genus2_rep(t), &sd, 1e-9).unwrap();
        assert_eq!(st.real_sign, 1);
        assert!(st.gram_residual < 1e-8);
        values.push(st.value);
    }
    let spread = values.iter().fold(0.0f64, |m, v| m.max((v - values[0]).abs()));
    assert!(spread < 1e-8 * values[0].abs(), "{values:?}");
    // With the Killing form 4 tr(XY) the value is 2^7 = 256 · (1/2).
    assert!((values[0] - 128.0).abs() < 1e-6, "{}", values[0]);
}

#[test]
fn surface_torsion_is_conjugation_invariant() {
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.5);
    let g = Mat2::new(1.3, 0.4, -0.2, (1.0 + 0.08) / 1.3);
    let a = surface_refined_torsion(&rho, &sd, 1e-9).unwrap().value;
    let b = surface_refined_torsion(&rho.conjugate(&g), &sd, 1e-9).unwrap().value;
    assert!((a - b).abs() < 1e-8 * a.abs());
}

#[test]
fn surface_torsion_does_not_depend_on_the_basis() {
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.3);
    let base = surface_refined_torsion(&rho, &sd, 1e-9).unwrap().value;
    for seed in 1..6 {
        let st = surface_refined_torsion_seeded(&rho, &sd, Some(seed), 1e-9).unwrap();
        assert!(st.gram_residual < 1e-8);
        assert!((st.value - base).abs() < 1e-7 * base.abs(), "seed {seed}: {} vs {base}", st.value);
    }
}

#[test]
fn su2_surface_torsion_matches_sl2r_calibration() {
    let sd = SurfaceData::new(2).unwrap();
    let su = surface_refined_torsion(&su2_f0(), &sd, 1e-9).unwrap();
    assert!(su.value.im.abs() < 1e-8);
    let sl = surface_refined_torsion(&genus2_rep(0.0), &sd, 1e-9).unwrap();
    assert!((su.calibration_factor() - sl.calibration_factor()).abs() < 1e-6);
}

#[test]
fn genus3_torsion_runs() {
    let sd = SurfaceData::new(3).unwrap();
    let st = surface_refined_torsion(&genus3_rep(), &sd, 1e-9).unwrap();
    assert_eq!(st.genus, 3);
    assert!(st.gram_residual < 1e-8);
    // 2^{g-1} 4^{3(g-1)} with g = 3.
    assert!((st.value - 16384.0).abs() < 1e-6, "{}", st.value);
    assert!((st.calibration_factor() - 65536.0).abs() < 1e-5);
}

#[test]
fn hyperbolic_power_commutes() {
    let c = Mat2::new(3.0, 1.0, 2.0, 1.0);
    let g = hyperbolic_power(&c, 0.37).unwrap();
    assert!(((g * c).dist(&(c * g))) < 1e-12);
    assert!((g.det() - 1.0).abs() < 1e-12);
    assert!(hyperbolic_power(&c, 1.0).unwrap().dist(&c) < 1e-12);
    assert!(hyperbolic_power(&Mat2::rotation(0.3), 0.5).is_err());
    let _ = Matrix::<f64>::identity(1);
}

#[test]
fn torsion_scales_with_the_invariant_form() {
    // Scaling the form by c rescales each of the 6g - 6 symplectic vectors
    // by c^{-1/2}, so the genus-2 torsion scales by c^3.
    let sd = SurfaceData::new(2).unwrap();
    let rho = genus2_rep(0.3);
    let f0 = su2_f0();
    for k in [1i64, 2, 4, 8] {
        let expected = 2.0 * (k as f64).powi(3);
        let sl = surface_refined_torsion_with_trace_factor(&rho, &sd, k, None, 1e-9).unwrap().value;
        let su = surface_refined_torsion_with_trace_factor(&f0, &sd, k, None, 1e-9).unwrap().value;
        assert!((sl - expected).abs() < 1e-9 * expected, "k = {k}: {sl}");
        assert!((su.re - expected).abs() < 1e-9 * expected && su.im.abs() < 1e-9 * expected);
    }
}
