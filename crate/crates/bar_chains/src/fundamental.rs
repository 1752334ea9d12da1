use std::collections::HashMap;

use chern_simons::{cocycle_l_real, ModOne};
use fox_words::{GroupRingElt, Presentation, Word};
use num_traits::ToPrimitive;
use sl2_reps::{Mat2, Rep};

use crate::maps::chain_map_c2_sum;
use crate::{BarChain, BarError};

/// A group element seen through a representation: matrix entries rounded to
/// a grid, so that words with equal images become equal keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatKey([i64; 4]);

/// Grid spacing used for [`MatKey`].
pub const KEY_QUANTUM: f64 = 1e-7;

impl MatKey {
    pub fn of(g: &Mat2<f64>) -> Self {
        let q = |x: f64| (x / KEY_QUANTUM).round() as i64;
        MatKey([q(g.a), q(g.b), q(g.c), q(g.d)])
    }
}

/// Push a word chain forward along `ρ`, identifying entries with equal images.
pub fn evaluate_keys(chain: &BarChain<Word>, rho: &Rep<f64>) -> Result<BarChain<MatKey>, BarError> {
    let mut cache: HashMap<Word, MatKey> = HashMap::new();
    let mut err = None;
    let out = chain.map(|w| {
        if let Some(k) = cache.get(w) {
            return *k;
        }
        let k = match rho.eval(w) {
            Ok(g) => MatKey::of(&g),
            Err(e) => {
                err.get_or_insert(e);
                MatKey([0; 4])
            }
        };
        cache.insert(w.clone(), k);
        k
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(out),
    }
}

/// The 3-chain `O' = Σ n_i (1, g_0^i, g_1^i, g_2^i)` coning off
/// `c_2 ∂_3(O_M) = Σ n_i (g_0^i, g_1^i, g_2^i)`, so that `∂O' = c_2 ∂_3(O_M)`.
///
/// `expansion` lists `(A_j, j)` with `∂_3(O_M) = Σ A_j r_j`. Whether
/// `c_2 ∂_3(O_M)` is a cycle depends on relations in the group, so it is
/// checked after pushing forward along `witness`.
pub fn build_fundamental_class(
    p: &Presentation,
    expansion: &[(GroupRingElt, usize)],
    witness: &Rep<f64>,
) -> Result<BarChain<Word>, BarError> {
    let z = chain_map_c2_sum(expansion, p.relators())?;
    let zb = evaluate_keys(&z, witness)?.boundary()?;
    if !zb.is_zero() {
        return Err(BarError::NotACycle { terms: zb.len() });
    }
    Ok(z.cone(&Word::identity()))
}

/// `24 Σ n_i l(ρ(g_0^i), ρ(g_1^i), ρ(g_2^i), ρ(g_3^i))` modulo 1.
pub fn pairing_24p1(p: &Presentation, o: &BarChain<Word>, rho: &Rep<f64>, eps: f64) -> Result<ModOne, BarError> {
    if o.degree() != 3 {
        return Err(BarError::DegreeMismatch { left: 3, right: o.degree() });
    }
    if let Some(index) = rho.first_violated_relator(p, eps)? {
        return Err(BarError::RelatorViolated(index));
    }
    let mut cache: HashMap<&Word, Mat2<f64>> = HashMap::new();
    let mut total = 0.0;
    for (t, c) in o.terms() {
        let mut g = [Mat2::identity(); 4];
        for (slot, w) in g.iter_mut().zip(t) {
            *slot = match cache.get(w) {
                Some(m) => *m,
                None => {
                    let m = rho.eval(w)?;
                    cache.insert(w, m);
                    m
                }
            };
        }
        let n = c.to_f64().ok_or(BarError::CoefficientOverflow)?;
        total += n * cocycle_l_real([&g[0], &g[1], &g[2], &g[3]]);
    }
    Ok(ModOne::new(24.0 * total))
}
