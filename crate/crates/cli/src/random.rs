//! Seeded random inputs for the property suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use scalar_matrix::{det, inverse, kernel_basis, rat, Matrix, Rational};
use sl2_reps::Mat2;
use torsion_core::{BasedComplex, ShortExact};

fn q(v: i64) -> Rational {
    rat(v, 1)
}

pub fn random_sl2(rng: &mut ChaCha8Rng) -> Mat2<f64> {
    loop {
        let (a, b, c) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if f64::abs(a) > 0.2 {
            return Mat2::new(a, b, c, (1.0 + b * c) / a);
        }
    }
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let data = (0..n * n).map(|_| q(rng.gen_range(-3..=3))).collect();
        let m = Matrix::new(n, n, data).expect("n x n data");
        if det(&m).expect("square") != q(0) {
            return m;
        }
    }
}

pub fn random_dims(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>, max: usize) -> Vec<usize> {
    let m = rng.gen_range(len);
    (0..m).map(|_| rng.gen_range(0..=max)).collect()
}

/// A split complex with random ranks, conjugated by random changes of basis.
pub fn random_complex(rng: &mut ChaCha8Rng, dims: &[usize]) -> BasedComplex<Rational> {
    let m = dims.len();
    let mut ranks = Vec::with_capacity(m.saturating_sub(1));
    let mut used_in = 0;
    for i in 0..m - 1 {
        let room = (dims[i] - used_in).min(dims[i + 1]);
        let r = rng.gen_range(0..=room);
        ranks.push(r);
        used_in = r;
    }
    let ps: Vec<Matrix<Rational>> = dims.iter().map(|&n| random_invertible(rng, n)).collect();
    let maps = (0..m - 1)
        .map(|i| {
            let mut std = Matrix::zeros(dims[i + 1], dims[i]);
            for k in 0..ranks[i] {
                std[(k, dims[i] - ranks[i] + k)] = q(rng.gen_range(1..=3));
            }
            let pinv = inverse(&ps[i], 0.0).expect("invertible");
            ps[i + 1].matmul(&std).expect("shape").matmul(&pinv).expect("shape")
        })
        .collect();
    BasedComplex::new(dims.to_vec(), maps).expect("consistent shapes")
}

pub fn with_default_h(c: BasedComplex<Rational>) -> BasedComplex<Rational> {
    let h = c.default_cohomology_basis(0.0).expect("exact backend");
    c.with_cohomology(h).expect("matching dims")
}

fn unit(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![q(0); n];
    v[k] = q(1);
    v
}

/// Off-diagonal block making `[[∂, φ], [0, ∂_]]` a complex: a homotopy term
/// plus maps from quotient cocycle classes into sub cocycles.
fn random_gluing(rng: &mut ChaCha8Rng, sub: &BasedComplex<Rational>, quo: &BasedComplex<Rational>) -> Vec<Matrix<Rational>> {
    let m = sub.len();
    let rand_mat = |rng: &mut ChaCha8Rng, r: usize, c: usize| {
        Matrix::new(r, c, (0..r * c).map(|_| q(rng.gen_range(-2..=2))).collect()).expect("r x c data")
    };
    let psi: Vec<Matrix<Rational>> = (0..m).map(|i| rand_mat(rng, sub.dims()[i], quo.dims()[i])).collect();
    (0..m - 1)
        .map(|i| {
            let a = sub.coboundary(i).matmul(&psi[i]).expect("shape");
            let b = psi[i + 1].matmul(quo.coboundary(i)).expect("shape");
            let mut phi = a.sub(&b).expect("shape");
            let z: Vec<Vec<Rational>> = if i + 2 < m {
                kernel_basis(sub.coboundary(i + 1), 0.0).expect("exact")
            } else {
                (0..sub.dims()[i + 1]).map(|k| unit(sub.dims()[i + 1], k)).collect()
            };
            let ann: Vec<Vec<Rational>> = if i > 0 {
                kernel_basis(&quo.coboundary(i - 1).transpose(), 0.0).expect("exact")
            } else {
                (0..quo.dims()[i]).map(|k| unit(quo.dims()[i], k)).collect()
            };
            if !z.is_empty() && !ann.is_empty() {
                let zm = Matrix::from_columns(sub.dims()[i + 1], &z).expect("columns");
                let am = Matrix::from_columns(quo.dims()[i], &ann).expect("columns").transpose();
                let x = rand_mat(rng, z.len(), ann.len());
                phi = phi.add(&zm.matmul(&x).expect("shape").matmul(&am).expect("shape")).expect("shape");
            }
            phi
        })
        .collect()
}

/// A random short exact sequence `0 -> C -> C̄ -> C_ -> 0` of rational
/// complexes with split distinguished bases.
pub fn random_short_exact(rng: &mut ChaCha8Rng) -> ShortExact<Rational> {
    loop {
        let dims = random_dims(rng, 2..=4, 3);
        let dims_q = random_dims(rng, dims.len()..=dims.len(), 3);
        if dims.iter().sum::<usize>() == 0 || dims_q.iter().sum::<usize>() == 0 {
            continue;
        }
        let sub = random_complex(rng, &dims);
        let quo = random_complex(rng, &dims_q);
        let phi = random_gluing(rng, &sub, &quo);
        let total_dims: Vec<usize> = dims.iter().zip(&dims_q).map(|(a, b)| a + b).collect();
        let maps = (0..dims.len() - 1)
            .map(|i| {
                let (a0, a1) = (dims[i], dims[i + 1]);
                let mut m = Matrix::zeros(total_dims[i + 1], total_dims[i]);
                m.set_block(0, 0, sub.coboundary(i));
                m.set_block(0, a0, &phi[i]);
                m.set_block(a1, a0, quo.coboundary(i));
                m
            })
            .collect();
        let total = with_default_h(BasedComplex::new(total_dims, maps).expect("block shapes"));
        let (mut j, mut k) = (Vec::new(), Vec::new());
        for i in 0..dims.len() {
            let (a, c) = (dims[i], dims_q[i]);
            let mut ji = Matrix::zeros(a + c, a);
            ji.set_block(0, 0, &Matrix::identity(a));
            let mut ki = Matrix::zeros(c, a + c);
            ki.set_block(0, a, &Matrix::identity(c));
            j.push(ji);
            k.push(ki);
        }
        return ShortExact { sub: with_default_h(sub), total, quotient: with_default_h(quo), j, k };
    }
}
