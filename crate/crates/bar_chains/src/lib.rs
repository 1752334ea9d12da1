//! Normalized bar chains of a group, the chain maps `c_0, c_1, c_2` from a
//! presentation complex, the fundamental 3-chain `O'` of a closed aspherical
//! 3-manifold and its pairing with the dilogarithm cocycle.

mod chain;
mod fundamental;
mod maps;

pub use chain::BarChain;
pub use fundamental::{build_fundamental_class, evaluate_keys, pairing_24p1, MatKey, KEY_QUANTUM};
pub use maps::{chain_map_c1, chain_map_c1_vec, chain_map_c2, chain_map_c2_sum};

use sl2_reps::RepError;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BarError {
    #[error("boundary of a degree-0 chain")]
    DegreeZero,
    #[error("a degree-{degree} tuple needs {} entries, got {len}", degree + 1)]
    TupleLength { degree: usize, len: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("no relator with index {0}")]
    UnknownRelator(usize),
    #[error("c2 of the 3-cell boundary is not a cycle ({terms} boundary terms survive)")]
    NotACycle { terms: usize },
    #[error("relator {0} is not sent to the identity")]
    RelatorViolated(usize),
    #[error("coefficient does not fit in a double")]
    CoefficientOverflow,
    #[error(transparent)]
    Rep(#[from] RepError),
}
