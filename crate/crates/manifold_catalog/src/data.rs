use fox_words::{abelianized_relations, GroupRingElt, Presentation};
use local_systems::ChainData;
use scalar_matrix::{det, rat, Matrix, Rational};
use serde_json::{json, Value};

/// A closed 3-manifold given by a balanced presentation and one 3-cell.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldData {
    pub name: String,
    pub presentation: Presentation,
    pub chain: ChainData,
    /// Heegaard genus of the splitting the presentation comes from.
    pub genus: usize,
    /// `∂_3(O_M) = Σ A_j r_j` as `(A_j, j)`, when the fundamental class is wanted.
    pub top_cell: Option<Vec<(GroupRingElt, usize)>>,
}

impl ManifoldData {
    /// Generators, relators and the top-cell expansion as plain JSON.
    pub fn to_json(&self) -> Value {
        let relators: Vec<String> = self.presentation.relators().iter().map(ToString::to_string).collect();
        let top = self.top_cell.as_ref().map(|t| {
            t.iter().map(|(a, j)| json!({"coefficient": a.to_string(), "relator": j + 1})).collect::<Vec<_>>()
        });
        let d3: Option<Vec<String>> = self.chain.d3.as_ref().map(|d| d.iter().map(ToString::to_string).collect());
        json!({
            "name": self.name,
            "generators": self.presentation.gens(),
            "relators": relators,
            "genus": self.genus,
            "d3": d3,
            "top_cell": top,
        })
    }
}

/// `|H_1|` from the abelianized relation matrix; `None` when infinite.
pub fn abelianization_order(p: &Presentation) -> Option<u64> {
    let rows = abelianized_relations(p);
    if rows.len() != p.gens() {
        return None;
    }
    let n = p.gens();
    let data: Vec<Rational> = rows.iter().flat_map(|r| r.iter().map(|&v| rat(v, 1))).collect();
    let m = Matrix::new(n, n, data).ok()?;
    let d = det(&m).ok()?;
    let v = d.to_integer();
    if v == 0.into() {
        None
    } else {
        u64::try_from(v.magnitude().clone()).ok()
    }
}
