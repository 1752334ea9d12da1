//! Free-group words, the integral group ring, Fox derivatives, and the
//! boundary matrices of a presentation complex.
//!
//! Generators are 1-based (`x1`, `x2`, ...). Words are kept freely reduced,
//! with powers expanded into `±1` letters.

mod presentation;
mod ring;
mod word;

pub use presentation::{abelianized_relations, boundary_matrices, fox_derivative, BoundaryMatrices, Presentation};
pub use ring::GroupRingElt;
pub use word::{Letter, Word};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FoxError {
    #[error("generator indices are 1-based; got 0")]
    ZeroGenerator,
    #[error("cannot parse word token `{0}`")]
    BadToken(String),
    #[error("presentation needs at least one generator")]
    NoGenerators,
    #[error("relator {relator} uses x{gen} but only {gens} generators are declared")]
    GeneratorOutOfRange { relator: usize, gen: usize, gens: usize },
    #[error("presentation text must start with a `gens: n` header")]
    MissingHeader,
}

/// Convenience: reduce a raw letter sequence.
pub fn reduce_word(raw: &[(usize, i32)]) -> Result<Word, FoxError> {
    Word::from_letters(raw.iter().copied())
}
