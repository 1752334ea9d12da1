use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use fox_words::{fox_derivative, Word};

use crate::{SurfaceData, SymplecticError};

/// A finite sum `Σ c · (p x_s) ⊗ (q x_t)` in `Z[F]^n ⊗ Z[F]^n`, where
/// `x_1, ..., x_n` is the basis dual to the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorChain {
    terms: BTreeMap<(Word, usize, Word, usize), i64>,
}

impl TensorChain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, usize, Word, usize), i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, p: &Word, s: usize, q: &Word, t: usize) -> i64 {
        self.terms.get(&(p.clone(), s, q.clone(), t)).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Word, s: usize, q: Word, t: usize, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry((p, s, q, t)) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&mut self, other: &TensorChain) {
        for ((p, s, q, t), c) in other.terms() {
            self.add_term(p.clone(), *s, q.clone(), *t, c);
        }
    }

    /// Diagonal left action `u · (p ⊗ q) = up ⊗ uq`.
    pub fn act(&self, u: &Word) -> TensorChain {
        let mut out = TensorChain::zero();
        for ((p, s, q, t), c) in self.terms() {
            out.add_term(u.mul(p), *s, u.mul(q), *t, c);
        }
        out
    }
}

/// `κ(u, v) = α(u) ⊗ u α(v)` with `α(w) = Σ_s (∂w/∂x_s) x_s`.
pub fn kappa(u: &Word, v: &Word, gens: usize) -> TensorChain {
    let mut out = TensorChain::zero();
    for s in 1..=gens {
        let du = fox_derivative(u, s);
        if du.is_zero() {
            continue;
        }
        for t in 1..=gens {
            for (q, d) in fox_derivative(v, t).terms() {
                let uq = u.mul(q);
                for (p, c) in du.terms() {
                    out.add_term(p.clone(), s, uq.clone(), t, c * d);
                }
            }
        }
    }
    out
}

/// The map `Υ` with `Υ(uv) = Υ(u) + u Υ(v) + κ(u, v)` and `Υ` vanishing on
/// the generators, evaluated one letter at a time.
pub fn upsilon(w: &Word, sd: &SurfaceData) -> Result<TensorChain, SymplecticError> {
    let gens = sd.gens();
    let mut out = TensorChain::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.gen > gens {
            return Err(SymplecticError::ForeignGenerator { gen: l.gen, gens });
        }
        let letter = Word::from_letters([(l.gen, l.exp as i32)]).expect("nonzero generator");
        if l.exp < 0 {
            // Υ(a^{-1}) = a^{-1} x ⊗ a^{-1} x, forced by Υ(a a^{-1}) = 0.
            out.add_term(prefix.mul(&letter), l.gen, prefix.mul(&letter), l.gen, 1);
        }
        out.add(&kappa(&prefix, &letter, gens));
        prefix = prefix.mul(&letter);
    }
    Ok(out)
}
