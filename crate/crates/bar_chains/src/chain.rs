use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::BarError;

/// A chain in the normalized bar complex: a finite sum of `(n+1)`-tuples with
/// integer coefficients. Tuples with two equal consecutive entries are zero
/// and are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarChain<E: Ord> {
    degree: usize,
    terms: BTreeMap<Vec<E>, BigInt>,
}

impl<E: Ord + Clone> BarChain<E> {
    pub fn zero(degree: usize) -> Self {
        BarChain { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&[E], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, tuple: &[E]) -> BigInt {
        self.terms.get(tuple).cloned().unwrap_or_default()
    }

    /// Add `c · (tuple)`, dropping degenerate tuples.
    pub fn add_term(&mut self, tuple: Vec<E>, c: impl Into<BigInt>) -> Result<(), BarError> {
        if tuple.len() != self.degree + 1 {
            return Err(BarError::TupleLength { degree: self.degree, len: tuple.len() });
        }
        let c = c.into();
        if c.is_zero() || tuple.windows(2).any(|w| w[0] == w[1]) {
            return Ok(());
        }
        let entry = self.terms.entry(tuple).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add_chain(&mut self, other: &BarChain<E>) -> Result<(), BarError> {
        self.add_scaled(other, &BigInt::from(1))
    }

    pub fn add_scaled(&mut self, other: &BarChain<E>, k: &BigInt) -> Result<(), BarError> {
        if other.degree != self.degree {
            return Err(BarError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * k)?;
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        BarChain { degree: self.degree, terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }

    /// Simplicial boundary `Σ (-1)^i (g_0, …, ĝ_i, …, g_n)`.
    pub fn boundary(&self) -> Result<Self, BarError> {
        if self.degree == 0 {
            return Err(BarError::DegreeZero);
        }
        let mut out = BarChain::zero(self.degree - 1);
        for (t, c) in &self.terms {
            for i in 0..t.len() {
                let mut face = t.clone();
                face.remove(i);
                out.add_term(face, if i % 2 == 0 { c.clone() } else { -c.clone() })?;
            }
        }
        Ok(out)
    }

    /// Cone with apex `e`: `(g_0, …, g_n) -> (e, g_0, …, g_n)`. For a cycle
    /// `z` whose entries avoid `e`, `∂ cone(z) = z`.
    pub fn cone(&self, e: &E) -> Self {
        let mut out = BarChain::zero(self.degree + 1);
        for (t, c) in &self.terms {
            let mut s = Vec::with_capacity(t.len() + 1);
            s.push(e.clone());
            s.extend(t.iter().cloned());
            out.add_term(s, c.clone()).expect("length is degree + 2");
        }
        out
    }

    /// Apply `f` to every entry, renormalizing and merging.
    pub fn map<F: Ord + Clone>(&self, mut f: impl FnMut(&E) -> F) -> BarChain<F> {
        let mut out = BarChain::zero(self.degree);
        for (t, c) in &self.terms {
            out.add_term(t.iter().map(&mut f).collect(), c.clone()).expect("same length");
        }
        out
    }

    /// Sum of absolute coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|v| v.abs()).sum()
    }
}

impl<E: Ord + Clone + fmt::Display> fmt::Display for BarChain<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.abs();
            let entries: Vec<String> = t.iter().map(ToString::to_string).collect();
            if i > 0 {
                write!(f, " ")?;
            }
            if mag == BigInt::from(1) {
                write!(f, "{sign}({})", entries.join(", "))?;
            } else {
                write!(f, "{sign}{mag}({})", entries.join(", "))?;
            }
        }
        Ok(())
    }
}
