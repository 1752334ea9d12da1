#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use scalar_matrix::{det, inverse, kernel_basis, rat, Matrix, Rational};
use torsion_core::BasedComplex;

pub fn q(v: i64) -> Rational {
    rat(v, 1)
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let data = (0..n * n).map(|_| q(rng.gen_range(-3..=3))).collect();
        let m = Matrix::new(n, n, data).unwrap();
        if det(&m).unwrap() != q(0) {
            return m;
        }
    }
}

/// Random exact complex: a standard split complex conjugated by random
/// invertible changes of basis. Ranks are chosen at random.
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
            // coimage of C^i occupies its last r coordinates, image in C^{i+1} its first r
            let mut std = Matrix::zeros(dims[i + 1], dims[i]);
            for k in 0..ranks[i] {
                std[(k, dims[i] - ranks[i] + k)] = q(rng.gen_range(1..=3));
            }
            let pinv = inverse(&ps[i], 0.0).unwrap();
            ps[i + 1].matmul(&std).unwrap().matmul(&pinv).unwrap()
        })
        .collect();
    BasedComplex::new(dims.to_vec(), maps).unwrap()
}

pub fn with_default_h(c: BasedComplex<Rational>) -> BasedComplex<Rational> {
    let h = c.default_cohomology_basis(0.0).unwrap();
    c.with_cohomology(h).unwrap()
}

pub fn random_dims(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>, max: usize) -> Vec<usize> {
    let m = rng.gen_range(len);
    (0..m).map(|_| rng.gen_range(0..=max)).collect()
}

/// A random map `C_^i -> C^{i+1}` family making the block matrix a complex:
/// a homotopy term `∂ψ - ψ∂_` plus maps killing boundaries and landing in cocycles.
pub fn random_gluing(
    rng: &mut ChaCha8Rng,
    sub: &BasedComplex<Rational>,
    quo: &BasedComplex<Rational>,
) -> Vec<Matrix<Rational>> {
    let m = sub.len();
    let rand_mat = |rng: &mut ChaCha8Rng, r: usize, c: usize| {
        Matrix::new(r, c, (0..r * c).map(|_| q(rng.gen_range(-2..=2))).collect()).unwrap()
    };
    let psi: Vec<Matrix<Rational>> = (0..m).map(|i| rand_mat(rng, sub.dims()[i], quo.dims()[i])).collect();
    (0..m - 1)
        .map(|i| {
            let a = sub.coboundary(i).matmul(&psi[i]).unwrap();
            let b = psi[i + 1].matmul(quo.coboundary(i)).unwrap();
            let mut phi = a.sub(&b).unwrap();
            let z: Vec<Vec<Rational>> = if i + 2 < m {
                kernel_basis(sub.coboundary(i + 1), 0.0).unwrap()
            } else {
                (0..sub.dims()[i + 1]).map(|k| unit(sub.dims()[i + 1], k)).collect()
            };
            let ann: Vec<Vec<Rational>> = if i > 0 {
                kernel_basis(&quo.coboundary(i - 1).transpose(), 0.0).unwrap()
            } else {
                (0..quo.dims()[i]).map(|k| unit(quo.dims()[i], k)).collect()
            };
            if !z.is_empty() && !ann.is_empty() {
                let zm = Matrix::from_columns(sub.dims()[i + 1], &z).unwrap();
                let am = Matrix::from_columns(quo.dims()[i], &ann).unwrap().transpose();
                let x = rand_mat(rng, z.len(), ann.len());
                phi = phi.add(&zm.matmul(&x).unwrap().matmul(&am).unwrap()).unwrap();
            }
            phi
        })
        .collect()
}

pub fn unit(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![q(0); n];
    v[k] = q(1);
    v
}
