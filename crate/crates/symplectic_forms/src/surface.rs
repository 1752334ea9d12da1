use fox_words::{fox_derivative, GroupRingElt, Presentation, Word};
use local_systems::ChainData;

use crate::SymplecticError;

/// The closed orientable surface of genus `g` with its one-relator
/// presentation `<a_1, b_1, ..., a_g, b_g | [a_1, b_1] ... [a_g, b_g]>`.
///
/// Generator `a_i` is `x_{2i-1}` and `b_i` is `x_{2i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceData {
    genus: usize,
    presentation: Presentation,
    chain: ChainData,
}

impl SurfaceData {
    pub fn new(genus: usize) -> Result<Self, SymplecticError> {
        if genus < 2 {
            return Err(SymplecticError::Genus(genus));
        }
        let r = (1..=genus).fold(Word::identity(), |acc, i| acc.mul(&commutator(&a(i), &b(i))));
        let presentation = Presentation::new(2 * genus, vec![r])?;
        let chain = ChainData::from_presentation(&presentation);
        Ok(SurfaceData { genus, presentation, chain })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn gens(&self) -> usize {
        2 * self.genus
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn relator(&self) -> &Word {
        &self.presentation.relators()[0]
    }

    /// Cellular chain data `C_2 -> C_1 -> C_0` of the universal cover.
    pub fn chain(&self) -> &ChainData {
        &self.chain
    }

    /// `∂r/∂x_s` for `s = 1..2g`.
    pub fn fox_row(&self) -> Vec<GroupRingElt> {
        (1..=self.gens()).map(|s| fox_derivative(self.relator(), s)).collect()
    }

    /// Dimension of `H^1(Σ; sl_2)` at an irreducible point.
    pub fn h1_dim(&self) -> usize {
        6 * self.genus - 6
    }
}

pub fn a(i: usize) -> Word {
    Word::gen(2 * i - 1)
}

pub fn b(i: usize) -> Word {
    Word::gen(2 * i)
}

pub fn commutator(u: &Word, v: &Word) -> Word {
    u.mul(v).mul(&u.inverse()).mul(&v.inverse())
}
