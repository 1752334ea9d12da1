use crate::ring::GroupRingElt;
use crate::word::Word;
use crate::FoxError;

/// Finite presentation `<x_1..x_n | r_1..r_k>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(gens: usize, relators: Vec<Word>) -> Result<Self, FoxError> {
        if gens == 0 {
            return Err(FoxError::NoGenerators);
        }
        for (j, r) in relators.iter().enumerate() {
            if r.max_gen() > gens {
                return Err(FoxError::GeneratorOutOfRange {
                    relator: j + 1,
                    gen: r.max_gen(),
                    gens,
                });
            }
        }
        Ok(Presentation { gens, relators })
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parse the text format: a header `gens: n` followed by one relator per
    /// line. Blank lines and `#` comments are ignored; a line `1` is the
    /// trivial relator.
    pub fn parse(text: &str) -> Result<Self, FoxError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or(FoxError::MissingHeader)?;
        let n = header
            .strip_prefix("gens:")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or(FoxError::MissingHeader)?;
        let rels = lines.map(Word::parse).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(n, rels)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.gens);
        for r in &self.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

/// Fox derivative `∂w/∂x_i`, computed letter by letter from
/// `∂(uv) = ∂u + u ∂v`, `∂x_i/∂x_i = 1`, `∂x_i^{-1}/∂x_i = -x_i^{-1}`.
pub fn fox_derivative(w: &Word, i: usize) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.gen == i {
            if l.exp == 1 {
                out.add_term(prefix.clone(), 1);
            } else {
                let mut t = prefix.clone();
                t.push(l);
                out.add_term(t, -1);
            }
        }
        prefix.push(l);
    }
    out
}

/// Boundary maps of the presentation 2-complex over `Z[F]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrices {
    /// `d2[i][j] = ∂r_j/∂x_i`, a `gens x relators` matrix.
    pub d2: Vec<Vec<GroupRingElt>>,
    /// `d1[i] = 1 - x_i`.
    pub d1: Vec<GroupRingElt>,
}

pub fn boundary_matrices(p: &Presentation) -> BoundaryMatrices {
    let g = p.gens();
    let d2 = (1..=g)
        .map(|i| p.relators().iter().map(|r| fox_derivative(r, i)).collect())
        .collect();
    let d1 = (1..=g).map(|i| GroupRingElt::one_minus(Word::gen(i))).collect();
    BoundaryMatrices { d2, d1 }
}

/// Integer relation matrix of the abelianized presentation,
/// `rows = relators`, `cols = generators`.
pub fn abelianized_relations(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators()
        .iter()
        .map(|r| (1..=p.gens()).map(|i| r.exponent_sum(i)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn product_rule_base_cases() {
        let xy = w("x1 x2");
        assert_eq!(fox_derivative(&xy, 1), GroupRingElt::one());
        assert_eq!(fox_derivative(&xy, 2), GroupRingElt::from_word(w("x1")));
    }

    #[test]
    fn inverse_rule() {
        let d = fox_derivative(&w("x1^-1"), 1);
        assert_eq!(d, GroupRingElt::term(w("x1^-1"), -1));
    }

    #[test]
    fn commutator_derivative() {
        let d = fox_derivative(&w("x1 x2 x1^-1 x2^-1"), 1);
        assert_eq!(d, GroupRingElt::one_minus(w("x1 x2 x1^-1")));
    }

    #[test]
    fn cyclic_relator_boundary() {
        let p = Presentation::new(1, vec![w("x1^3")]).unwrap();
        let b = boundary_matrices(&p);
        let mut expect = GroupRingElt::one();
        expect.add_term(w("x1"), 1);
        expect.add_term(w("x1^2"), 1);
        assert_eq!(b.d2[0][0], expect);
        assert_eq!(b.d1[0], GroupRingElt::one_minus(w("x1")));
    }

    #[test]
    fn trivial_relator_gives_zero_column() {
        let p = Presentation::new(2, vec![Word::identity()]).unwrap();
        let b = boundary_matrices(&p);
        assert!(b.d2.iter().all(|row| row[0].is_zero()));
    }

    #[test]
    fn text_format() {
        let p = Presentation::parse("# seifert\ngens: 2\nx2^7 x2^-1 x1^-1 x2^-1 x1^-1\n\nx1 x1\n").unwrap();
        assert_eq!(p.gens(), 2);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        assert!(Presentation::parse("gens: 1\nx2").is_err());
        assert!(Presentation::parse("x1").is_err());
    }
}
