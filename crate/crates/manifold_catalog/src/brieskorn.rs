use fox_words::{GroupRingElt, Presentation, Word};
use local_systems::ChainData;

use crate::{CatalogError, ManifoldData};

/// `Σ(m,p,q)` with `m, p, q` pairwise coprime, `m, p ≥ 3` and `q = dp + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrieskornSpec {
    pub m: u32,
    pub p: u32,
    pub q: u32,
    pub d: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl BrieskornSpec {
    pub fn new(m: u32, p: u32, q: u32) -> Result<Self, CatalogError> {
        let bad = |why: &str| Err(CatalogError::InvalidSpec(format!("Σ({m},{p},{q}): {why}")));
        if m < 3 || p < 3 {
            return bad("need m, p ≥ 3");
        }
        if gcd(m, p) != 1 || gcd(m, q) != 1 || gcd(p, q) != 1 {
            return bad("exponents must be pairwise coprime");
        }
        if q < 2 || (q - 1) % p != 0 {
            return bad("q must be dp + 1");
        }
        Ok(BrieskornSpec { m, p, q, d: (q - 1) / p })
    }

    fn letters(&self, start: usize, count: usize) -> Vec<(usize, i32)> {
        let (m, q) = (self.m as usize, self.q as usize);
        (0..count).map(|j| ((start + j * q) % m + 1, 1)).collect()
    }
}

/// `r_i = x_i x_{i+q} ⋯ x_{i+(q-1)dq} (x_{i+1} x_{i+q+1} ⋯ x_{i+(q-1)dq-q+1})^{-1}`,
/// subscripts mod `m`, `i` zero-based.
pub fn brieskorn_relator(s: &BrieskornSpec, i: usize) -> Word {
    let k = ((s.q - 1) * s.d) as usize;
    let head = Word::from_letters(s.letters(i, k + 1)).expect("positive generators");
    let tail = Word::from_letters(s.letters(i + 1, k)).expect("positive generators");
    head.mul(&tail.inverse())
}

/// The word `x_{i+(K-1)q} x_{i+Kq} ⋯ x_i` with `K = (q-1)d`: steps of `q`
/// from `i + (K-1)q` until the subscript returns to `i`.
pub fn brieskorn_top_word(s: &BrieskornSpec, i: usize) -> Word {
    let (m, k) = (s.m as usize, ((s.q - 1) * s.d) as usize);
    let first = k - 1;
    let last = first.div_ceil(m).max(1) * m;
    let last = if last == first { last + m } else { last };
    Word::from_letters(s.letters(i + first * s.q as usize, last - first + 1)).expect("positive generators")
}

/// Presentation and chain data of `Σ(m,p,q)` from its genus-`m` splitting.
pub fn brieskorn(m: u32, p: u32, q: u32) -> Result<ManifoldData, CatalogError> {
    let s = BrieskornSpec::new(m, p, q)?;
    let relators: Vec<Word> = (0..m as usize).map(|i| brieskorn_relator(&s, i)).collect();
    let pres = Presentation::new(m as usize, relators)?;
    let d3: Vec<GroupRingElt> = (0..m as usize).map(|i| GroupRingElt::one_minus(brieskorn_top_word(&s, i))).collect();
    let chain = ChainData::closed(&pres, d3.clone())?;
    Ok(ManifoldData {
        name: format!("Sigma({m},{p},{q})"),
        presentation: pres,
        chain,
        genus: m as usize,
        top_cell: Some(d3.into_iter().enumerate().map(|(j, a)| (a, j)).collect()),
    })
}

/// `(m-1)(p-1)(q-1)/4 - 2 #{(s,t,u) : 0<s<m, 0<t<p, 0<u<q, s/m + t/p + u/q < 1}`.
///
/// Signed: for some valid specs, e.g. `Σ(7,8,9)`, the expression is negative.
pub fn brieskorn_count(m: u32, p: u32, q: u32) -> Result<i64, CatalogError> {
    BrieskornSpec::new(m, p, q)?;
    let (m, p, q) = (m as i64, p as i64, q as i64);
    let mut lattice = 0i64;
    for s in 1..m {
        for t in 1..p {
            // s/m + t/p + u/q < 1  <=>  u·mp < q(mp - s·p - t·m)
            let room = m * p - s * p - t * m;
            if room > 0 {
                lattice += ((q * room - 1) / (m * p)).min(q - 1);
            }
        }
    }
    Ok((m - 1) * (p - 1) * (q - 1) / 4 - 2 * lattice)
}
