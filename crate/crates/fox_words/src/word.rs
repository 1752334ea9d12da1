use std::fmt;

use crate::FoxError;

/// A single letter `x_gen^exp` with `exp = ±1`. Generators are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        debug_assert!(gen > 0 && (exp == 1 || exp == -1));
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.exp == -other.exp
    }
}

/// A freely reduced word in the free group on `x_1, x_2, ...`.
///
/// The empty word is the identity. Powers are stored expanded, one letter
/// per `±1` exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![Letter::new(i, 1)])
    }

    pub fn gen_inv(i: usize) -> Self {
        Word(vec![Letter::new(i, -1)])
    }

    /// Freely reduce a raw letter sequence. Exponents may be any nonzero
    /// integer and are expanded into `±1` letters.
    pub fn from_letters<I>(raw: I) -> Result<Self, FoxError>
    where
        I: IntoIterator<Item = (usize, i32)>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for (gen, exp) in raw {
            if gen == 0 {
                return Err(FoxError::ZeroGenerator);
            }
            if exp == 0 {
                continue;
            }
            let unit = Letter::new(gen, exp.signum() as i8);
            for _ in 0..exp.unsigned_abs() {
                push_reduced(&mut out, unit);
            }
        }
        Ok(Word(out))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_gen(&self) -> usize {
        self.0.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Append one letter, reducing against the tail.
    pub fn push(&mut self, l: Letter) {
        push_reduced(&mut self.0, l);
    }

    /// Exponent sum of generator `i` (image in the abelianization).
    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == i).map(|l| l.exp as i64).sum()
    }

    /// Parse whitespace separated tokens `x3`, `x3^-1`, `x3^2`. The token `1`
    /// (or an empty string) denotes the identity.
    pub fn parse(s: &str) -> Result<Self, FoxError> {
        let mut raw = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            raw.push(parse_token(tok)?);
        }
        Word::from_letters(raw)
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    match out.last() {
        Some(&last) if last.cancels(l) => {
            out.pop();
        }
        _ => out.push(l),
    }
}

fn parse_token(tok: &str) -> Result<(usize, i32), FoxError> {
    let bad = || FoxError::BadToken(tok.to_string());
    let rest = tok.strip_prefix('x').ok_or_else(bad)?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let gen = idx.parse::<usize>().map_err(|_| bad())?;
    if gen == 0 {
        return Err(FoxError::ZeroGenerator);
    }
    Ok((gen, exp))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "x{}", l.gen)?;
            } else {
                write!(f, "x{}^-1", l.gen)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_inverse_pair() {
        let w = Word::from_letters([(1, 1), (1, -1)]).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn inner_cancellation() {
        let w = Word::from_letters([(1, 1), (2, 1), (2, -1), (1, 1)]).unwrap();
        assert_eq!(w, Word::gen(1).pow(2));
    }

    #[test]
    fn reduced_word_is_fixed() {
        let raw = [(1, 1), (2, -1), (1, 1), (3, 1)];
        let w = Word::from_letters(raw).unwrap();
        let again = Word::from_letters(w.letters().iter().map(|l| (l.gen, l.exp as i32))).unwrap();
        assert_eq!(w, again);
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn parse_roundtrip() {
        let w = Word::parse("x3 x1^-1 x2^2").unwrap();
        assert_eq!(w.to_string(), "x3 x1^-1 x2 x2");
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        assert!(Word::parse("y1").is_err());
        assert!(Word::parse("x0").is_err());
        assert!(Word::parse("1").unwrap().is_identity());
    }

    #[test]
    fn inverse_and_pow() {
        let w = Word::parse("x1 x2").unwrap();
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.pow(-2), Word::parse("x2^-1 x1^-1 x2^-1 x1^-1").unwrap());
        assert_eq!(w.exponent_sum(1), 1);
    }
}
