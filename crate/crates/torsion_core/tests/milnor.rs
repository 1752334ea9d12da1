mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scalar_matrix::{Matrix, Rational};
use torsion_core::*;

fn block_complex(
    sub: &BasedComplex<Rational>,
    quo: &BasedComplex<Rational>,
    phi: &[Matrix<Rational>],
) -> BasedComplex<Rational> {
    let dims: Vec<usize> = sub.dims().iter().zip(quo.dims()).map(|(a, b)| a + b).collect();
    let maps = (0..sub.len() - 1)
        .map(|i| {
            let (a0, a1) = (sub.dims()[i], sub.dims()[i + 1]);
            let mut m = Matrix::zeros(dims[i + 1], dims[i]);
            m.set_block(0, 0, sub.coboundary(i));
            m.set_block(0, a0, &phi[i]);
            m.set_block(a1, a0, quo.coboundary(i));
            m
        })
        .collect();
    BasedComplex::new(dims, maps).unwrap()
}

fn inclusions(sub: &BasedComplex<Rational>, quo: &BasedComplex<Rational>) -> (Vec<Matrix<Rational>>, Vec<Matrix<Rational>>) {
    let mut js = Vec::new();
    let mut ks = Vec::new();
    for i in 0..sub.len() {
        let (a, c) = (sub.dims()[i], quo.dims()[i]);
        let mut j = Matrix::zeros(a + c, a);
        j.set_block(0, 0, &Matrix::identity(a));
        let mut k = Matrix::zeros(c, a + c);
        k.set_block(0, a, &Matrix::identity(c));
        js.push(j);
        ks.push(k);
    }
    (js, ks)
}

fn sequence(rng: &mut ChaCha8Rng, dims: &[usize], dims_q: &[usize], glue: bool) -> ShortExact<Rational> {
    let sub = random_complex(rng, dims);
    let quo = random_complex(rng, dims_q);
    let phi = if glue {
        random_gluing(rng, &sub, &quo)
    } else {
        (0..dims.len() - 1).map(|i| Matrix::zeros(dims[i + 1], dims_q[i])).collect()
    };
    let total = with_default_h(block_complex(&sub, &quo, &phi));
    let (j, k) = inclusions(&sub, &quo);
    ShortExact { sub: with_default_h(sub), total, quotient: with_default_h(quo), j, k }
}

#[test]
fn trivial_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..20 {
        let dims = random_dims(&mut rng, 2..=4, 3);
        let zeros = vec![0; dims.len()];
        let s = sequence(&mut rng, &dims, &zeros, false);
        let r = les_torsion_and_eta(&s, 0.0, 0.0).unwrap();
        assert_eq!(r.eta_corrected, 0);
        assert!(r.holds_corrected);
    }
}

#[test]
fn split_acyclic_sum_multiplies() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = 0;
    while seen < 20 {
        let dims = random_dims(&mut rng, 2..=4, 3);
        let dims_q = random_dims(&mut rng, dims.len()..=dims.len(), 3);
        let s = sequence(&mut rng, &dims, &dims_q, false);
        if !s.sub.is_acyclic(0.0).unwrap() || !s.quotient.is_acyclic(0.0).unwrap() {
            continue;
        }
        seen += 1;
        let r = les_torsion_and_eta(&s, 0.0, 0.0).unwrap();
        // acyclic pieces: the long exact sequence is empty, only the
        // reordering sign of the split basis survives
        assert_eq!(r.les_torsion, q(1));
        let product = r.torsion_sub.clone() * r.torsion_quotient.clone();
        let sign = if r.eta_corrected == 1 { q(-1) } else { q(1) };
        assert_eq!(r.torsion_total, sign * product);
        assert!(r.holds_corrected);
    }
}

#[test]
fn random_sequences_are_multiplicative_with_corrected_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut total, mut stated_ok) = (0, 0);
    while total < 250 {
        let dims = random_dims(&mut rng, 2..=4, 3);
        let dims_q = random_dims(&mut rng, dims.len()..=dims.len(), 3);
        if dims.iter().sum::<usize>() == 0 || dims_q.iter().sum::<usize>() == 0 {
            continue;
        }
        let s = sequence(&mut rng, &dims, &dims_q, true);
        let r = les_torsion_and_eta(&s, 0.0, 0.0).unwrap();
        assert!(r.holds_corrected, "dims {dims:?} {dims_q:?}: {r:?}");
        // up to sign the identity always holds
        assert!(r.holds_stated || r.eta_stated != r.eta_corrected);
        stated_ok += r.holds_stated as usize;
        total += 1;
    }
    println!("stated formula: {stated_ok}/{total}");
}

#[test]
fn rejects_non_exact_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut s = sequence(&mut rng, &[2, 2], &[1, 1], true);
    s.j[0] = s.j[0].scale(&q(2));
    assert!(matches!(les_torsion_and_eta(&s, 0.0, 0.0), Err(TorsionError::BasisDeterminant { .. }) | Err(TorsionError::NotChainMap { .. })));
    let mut s = sequence(&mut rng, &[2, 2], &[1, 1], true);
    s.k[1] = Matrix::zeros(1, 3);
    assert!(les_torsion_and_eta(&s, 0.0, 0.0).is_err());
}
