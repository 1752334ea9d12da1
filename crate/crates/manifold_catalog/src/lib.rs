//! Brieskorn spheres `Σ(m,p,q)` and the Seifert manifolds `M_{m,n}`:
//! presentations, closed chain data, fundamental-class input and the
//! Zariski-dense `SL_2(R)` representations of `M_{m,n}`.

mod brieskorn;
mod data;
mod seifert;

pub use brieskorn::{brieskorn, brieskorn_count, brieskorn_relator, brieskorn_top_word, BrieskornSpec};
pub use data::{abelianization_order, ManifoldData};
pub use seifert::{
    admissible, beta, gamma, seifert, seifert_rep, seifert_reps, seifert_torsion_closed, seifert_torsion_computed,
    SeifertRep, SeifertSpec,
};

use fox_words::FoxError;
use local_systems::LocalError;
use sl2_reps::RepError;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CatalogError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("(k, l) = ({k}, {l}) is not admissible for M_{{{m},{n}}}")]
    Inadmissible { m: u32, n: u32, k: u32, l: u32 },
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
