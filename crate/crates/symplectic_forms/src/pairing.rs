use std::collections::HashMap;

use fox_words::Word;
use local_systems::{evaluate_group_ring, CoefficientKind};
use scalar_matrix::{Matrix, Scalar};
use sl2_reps::{adjoint_matrix, killing_gram, Rep};

use crate::surface::{a, b};
use crate::tensor::upsilon;
use crate::{SurfaceData, SymplecticError};

/// The pairing `(f, f') -> ψ((f ⊗ f')((a ⊗ a) Υ(r)))` on 1-cochains, with the
/// words of `Υ(r)` already evaluated in the coefficient module.
///
/// A cochain is a vector of length `n · 2g` whose `s`-th block of `n`
/// entries is `f(x_s)`.
#[derive(Clone, Debug)]
pub struct CupForm<S> {
    dim: usize,
    gens: usize,
    gram: Matrix<S>,
    terms: Vec<(Matrix<S>, usize, Matrix<S>, usize, i64)>,
    fox_row: Vec<Matrix<S>>,
}

impl<S: Scalar + Copy> CupForm<S> {
    /// Adjoint coefficients paired by the Killing form `4 tr(XY)`.
    pub fn adjoint(rho: &Rep<S>, sd: &SurfaceData) -> Result<Self, SymplecticError> {
        Self::adjoint_with_trace_factor(rho, sd, 4)
    }

    /// Adjoint coefficients paired by `k tr(XY)`.
    pub fn adjoint_with_trace_factor(rho: &Rep<S>, sd: &SurfaceData, k: i64) -> Result<Self, SymplecticError> {
        if rho.gens() != sd.gens() {
            return Err(SymplecticError::Dimension { expected: sd.gens(), got: rho.gens() });
        }
        let mut cache: HashMap<Word, Matrix<S>> = HashMap::new();
        let mut ad = |w: &Word| -> Result<Matrix<S>, SymplecticError> {
            if let Some(m) = cache.get(w) {
                return Ok(m.clone());
            }
            let m = adjoint_matrix(&rho.eval(w)?);
            cache.insert(w.clone(), m.clone());
            Ok(m)
        };
        let ups = upsilon(sd.relator(), sd)?;
        let mut terms = Vec::with_capacity(ups.len());
        for ((p, s, q, t), c) in ups.terms() {
            terms.push((ad(p)?, *s, ad(q)?, *t, c));
        }
        let fox_row = sd
            .fox_row()
            .iter()
            .map(|e| evaluate_group_ring(e, rho, CoefficientKind::Adjoint3))
            .collect::<Result<_, _>>()?;
        let gram = killing_gram::<S>().scale(&(S::from_i64(k) / S::from_i64(4)));
        Ok(CupForm { dim: 3, gens: sd.gens(), gram, terms, fox_row })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Length of a cochain vector.
    pub fn cochain_len(&self) -> usize {
        self.dim * self.gens
    }

    /// Largest entry of `Σ_s ρ(∂r/∂x_s) f(x_s)`.
    pub fn cocycle_residual(&self, f: &[S]) -> Result<f64, SymplecticError> {
        self.check_len(f)?;
        let mut acc = vec![S::zero(); self.dim];
        for (s, m) in self.fox_row.iter().enumerate() {
            let v = m.mul_vec(self.block(f, s + 1))?;
            for (x, y) in acc.iter_mut().zip(v) {
                *x = *x + y;
            }
        }
        Ok(acc.iter().map(|x| x.magnitude()).fold(0.0, f64::max))
    }

    /// The pairing without cocycle checks.
    pub fn pair(&self, f: &[S], fp: &[S]) -> Result<S, SymplecticError> {
        self.check_len(f)?;
        self.check_len(fp)?;
        let mut total = S::zero();
        for (p, s, q, t, c) in &self.terms {
            let u = p.mul_vec(self.block(f, *s))?;
            let v = q.mul_vec(self.block(fp, *t))?;
            total = total + S::from_i64(*c) * self.psi(&u, &v);
        }
        Ok(total)
    }

    fn psi(&self, u: &[S], v: &[S]) -> S {
        let gv = self.gram.mul_vec(v).expect("gram is square");
        u.iter().zip(gv).fold(S::zero(), |acc, (x, y)| acc + *x * y)
    }

    fn block<'a>(&self, f: &'a [S], s: usize) -> &'a [S] {
        &f[self.dim * (s - 1)..self.dim * s]
    }

    fn check_len(&self, f: &[S]) -> Result<(), SymplecticError> {
        if f.len() != self.cochain_len() {
            return Err(SymplecticError::Dimension { expected: self.cochain_len(), got: f.len() });
        }
        Ok(())
    }
}

impl CupForm<f64> {
    /// Trivial real coefficients paired by multiplication; this is the
    /// intersection form on `H^1(Σ; R)`.
    pub fn trivial(sd: &SurfaceData) -> Result<Self, SymplecticError> {
        let one = Matrix::identity(1);
        let ups = upsilon(sd.relator(), sd)?;
        let terms = ups.terms().map(|((_, s, _, t), c)| (one.clone(), *s, one.clone(), *t, c)).collect();
        let fox_row = sd.fox_row().iter().map(|e| Matrix::identity(1).scale(&(e.augmentation() as f64))).collect();
        Ok(CupForm { dim: 1, gens: sd.gens(), gram: one, terms, fox_row })
    }
}

/// Cup product of two adjoint 1-cocycles, checked to be cocycles within `eps`
/// (relative to their size).
pub fn cup_pairing<S: Scalar + Copy>(
    f: &[S],
    fp: &[S],
    rho: &Rep<S>,
    sd: &SurfaceData,
    eps: f64,
) -> Result<S, SymplecticError> {
    let form = CupForm::adjoint(rho, sd)?;
    for v in [f, fp] {
        let r = form.cocycle_residual(v)?;
        let scale = v.iter().map(|x| x.magnitude()).fold(1.0, f64::max);
        if r > eps * scale {
            return Err(SymplecticError::NotACocycle { residual: r });
        }
    }
    form.pair(f, fp)
}

/// The same pairing written out generator by generator, with
/// `I_i = [a_1, b_1] ... [a_{i-1}, b_{i-1}]`. Used as an independent check of
/// the `Υ(r)` route.
pub fn explicit_pairing<S: Scalar + Copy>(
    f: &[S],
    fp: &[S],
    rho: &Rep<S>,
    sd: &SurfaceData,
) -> Result<S, SymplecticError> {
    let g = sd.genus();
    let n = 3;
    if f.len() != n * 2 * g || fp.len() != f.len() {
        return Err(SymplecticError::Dimension { expected: n * 2 * g, got: f.len().min(fp.len()) });
    }
    let r = |w: &Word| -> Result<Matrix<S>, SymplecticError> { Ok(adjoint_matrix(&rho.eval(w)?)) };
    let gram = killing_gram::<S>();
    let psi = |u: &[S], v: &[S]| -> S {
        let gv = gram.mul_vec(v).expect("3x3");
        u.iter().zip(gv).fold(S::zero(), |acc, (x, y)| acc + *x * y)
    };
    let blk = |h: &[S], s: usize| -> Vec<S> { h[n * (s - 1)..n * s].to_vec() };
    let app = |m: &Matrix<S>, v: &[S]| m.mul_vec(v).expect("3x3");
    let plus = |u: Vec<S>, v: Vec<S>| -> Vec<S> { u.into_iter().zip(v).map(|(x, y)| x + y).collect() };
    let id = Matrix::<S>::identity(n);
    let inv = |w: Word| w.inverse();
    let prefix = |i: usize| {
        (1..i).fold(Word::identity(), |acc, m| acc.mul(&crate::surface::commutator(&a(m), &b(m))))
    };
    let w = |parts: &[&Word]| parts.iter().fold(Word::identity(), |acc, p| acc.mul(p));

    let mut total = S::zero();
    for i in 1..=g {
        let (ai, bi) = (a(i), b(i));
        let (ai_, bi_) = (inv(ai.clone()), inv(bi.clone()));
        let (x, y) = (blk(f, 2 * i - 1), blk(f, 2 * i));
        let (xp, yp) = (blk(fp, 2 * i - 1), blk(fp, 2 * i));

        let m1 = r(&ai)?.add(&r(&bi_)?)?.sub(&r(&w(&[&ai, &bi, &ai_, &bi_]))?)?;
        total = total + psi(&x, &app(&m1, &yp));
        total = total - psi(&y, &app(&r(&w(&[&bi, &ai_]))?, &xp));
        total = total + psi(&x, &app(&id.sub(&r(&w(&[&ai, &bi, &ai_]))?)?, &xp));
        total = total + psi(&y, &app(&id.sub(&r(&w(&[&bi, &ai_, &bi_]))?)?, &yp));

        let side = |h: &[S], k: usize| -> Result<Vec<S>, SymplecticError> {
            let (ak, bk) = (a(k), b(k));
            let ak_ = ak.inverse();
            let ik = prefix(k);
            let mx = r(&ik)?.sub(&r(&w(&[&ik, &ak, &bk, &ak_]))?)?;
            let my = r(&w(&[&ik, &ak]))?.sub(&r(&prefix(k + 1))?)?;
            Ok(plus(app(&mx, &blk(h, 2 * k - 1)), app(&my, &blk(h, 2 * k))))
        };
        let right = side(fp, i)?;
        for m in 1..i {
            total = total + psi(&side(f, m)?, &right);
        }
    }
    Ok(total)
}
