use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalar_matrix::*;

fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect::<Vec<_>>()).unwrap()
}

fn fm(rows: &[&[f64]]) -> Matrix<f64> {
    Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// Laplace expansion along the first row; independent of the LU code.
fn cofactor_det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 0 {
        return rat(1, 1);
    }
    let mut acc = rat(0, 1);
    for j in 0..n {
        let minor_rows: Vec<Vec<Rational>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
            .collect();
        let minor = if n == 1 { Matrix::zeros(0, 0) } else { Matrix::from_rows(&minor_rows).unwrap() };
        let term = m[(0, j)].clone() * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn random_int_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, lim: i64) -> Matrix<Rational> {
    let rows: Vec<Vec<Rational>> =
        (0..r).map(|_| (0..c).map(|_| rat(rng.gen_range(-lim..=lim), 1)).collect()).collect();
    Matrix::from_rows(&rows).unwrap()
}

#[test]
fn det_examples() {
    assert_eq!(det(&Matrix::<Rational>::identity(3)).unwrap(), rat(1, 1));
    assert_eq!(det(&qm(&[&[2, 0], &[0, 3]])).unwrap(), rat(6, 1));
    assert!((det(&fm(&[&[2.0, 0.0], &[0.0, 3.0]])).unwrap() - 6.0).abs() < 1e-15);
    assert!(matches!(det(&Matrix::<f64>::zeros(2, 3)), Err(MatrixError::NotSquare(2, 3))));
}

#[test]
fn det_matches_cofactor_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let m = random_int_matrix(&mut rng, 4, 4, 5);
        assert_eq!(det(&m).unwrap(), cofactor_det(&m));
    }
}

#[test]
fn det_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let a = random_int_matrix(&mut rng, 4, 4, 6);
        let b = random_int_matrix(&mut rng, 4, 4, 6);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());

        let af = a.map(|x| x.to_f64());
        let bf = b.map(|x| x.to_f64());
        let lhs = det(&af.matmul(&bf).unwrap()).unwrap();
        let rhs = det(&af).unwrap() * det(&bf).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
    }
}

#[test]
fn rank_examples() {
    assert_eq!(rank_eps(&Matrix::<f64>::zeros(3, 4), 1e-9).unwrap(), 0);
    let u = [1.0, -2.0, 0.5, 3.0, 1.5];
    let v = [2.0, 1.0, -1.0, 0.25, 4.0];
    let outer = Matrix::from_rows(&u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect::<Vec<_>>()).unwrap();
    assert_eq!(rank_eps(&outer, 1e-9).unwrap(), 1);
    let tiny = fm(&[&[1.0, 0.0], &[0.0, 1e-14]]);
    assert_eq!(rank_eps(&tiny, 1e-9).unwrap(), 1);
    assert_eq!(rank_eps(&tiny, 0.0).unwrap(), 2);
}

#[test]
fn exact_backend_rejects_positive_tolerance() {
    let m = qm(&[&[1, 2]]);
    assert_eq!(rank_eps(&m, 1e-9), Err(MatrixError::ExactTolerance(1e-9)));
    assert_eq!(rank_eps(&m, 0.0).unwrap(), 1);
    assert!(rank_eps(&fm(&[&[1.0]]), -1.0).is_err());
}

#[test]
fn kernel_examples() {
    let k = kernel_basis(&qm(&[&[1, 1]]), 0.0).unwrap();
    assert_eq!(k, vec![vec![rat(1, 1), rat(-1, 1)]]);
    assert!(kernel_basis(&Matrix::<Rational>::identity(3), 0.0).unwrap().is_empty());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let a = random_int_matrix(&mut rng, 4, 2, 4).map(|x| x.to_f64());
        let b = random_int_matrix(&mut rng, 2, 4, 4).map(|x| x.to_f64());
        let m = a.matmul(&b).unwrap();
        let r = rank_eps(&m, 1e-9).unwrap();
        let ker = kernel_basis(&m, 1e-9).unwrap();
        assert_eq!(ker.len(), 4 - r);
        for v in &ker {
            let mv = m.mul_vec(v).unwrap();
            let res = mv.iter().map(|x| x.abs()).fold(0.0, f64::max);
            assert!(res <= 10.0 * 1e-9 * m.norm_inf(), "residual {res}");
        }
    }
}

#[test]
fn solve_and_inverse() {
    let a = qm(&[&[2, 1], &[1, 1]]);
    let x = solve(&a, &[rat(3, 1), rat(2, 1)], 0.0).unwrap();
    assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
    let singular = qm(&[&[1, 1], &[1, 1]]);
    assert!(matches!(solve(&singular, &[rat(1, 1), rat(2, 1)], 0.0), Err(MatrixError::Inconsistent(_))));
    let inv = inverse(&a, 0.0).unwrap();
    assert_eq!(a.matmul(&inv).unwrap(), Matrix::identity(2));
    assert_eq!(inverse(&singular, 0.0), Err(MatrixError::Singular));
}

#[test]
fn pivot_columns_are_independent() {
    let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
    let p = pivot_columns(&m, 0.0).unwrap();
    assert_eq!(p.len(), 2);
    assert_eq!(rank_eps(&m.select_columns(&p), 0.0).unwrap(), 2);
    let q = independent_columns_in_order(&m, &[1, 0, 2], 0.0).unwrap();
    assert_eq!(q, vec![1, 2]);
}

proptest! {
    #[test]
    fn rank_invariant_under_permutations(
        entries in prop::collection::vec(-3i64..=3, 12),
        row_perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        col_perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let m = Matrix::new(3, 4, entries.iter().map(|&v| rat(v, 1)).collect()).unwrap();
        let mut p = Matrix::zeros(3, 4);
        for i in 0..3 {
            for j in 0..4 {
                p[(i, j)] = m[(row_perm[i], col_perm[j])].clone();
            }
        }
        prop_assert_eq!(rank_eps(&m, 0.0).unwrap(), rank_eps(&p, 0.0).unwrap());
        let mf = m.map(|x| x.to_f64());
        prop_assert_eq!(rank_eps(&mf, 1e-9).unwrap(), rank_eps(&m, 0.0).unwrap());
    }
}
