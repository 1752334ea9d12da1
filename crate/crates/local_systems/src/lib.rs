//! Cochain complexes `C^*_ρ(X; F^n)` built from Fox-calculus boundary
//! matrices and a representation, with standard, adjoint or trivial
//! coefficients.
//!
//! `C^i = Hom(C_i(X~), F^n)` and `δ^i(φ) = φ ∘ ∂_{i+1}`: the coboundary is the
//! entrywise evaluation of `∂_{i+1}` transposed at the block level.

use std::collections::HashMap;

use fox_words::{boundary_matrices, GroupRingElt, Presentation, Word};
use scalar_matrix::{Matrix, Scalar};
use sl2_reps::{adjoint_matrix, Mat2, Rep, RepError};
use torsion_core::{BasedComplex, TorsionError};

/// Default entrywise tolerance for relator images.
pub const RELATOR_EPS: f64 = 1e-9;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum LocalError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("relator {index} is not sent to the identity (residual {residual:e})")]
    RelatorViolated { index: usize, residual: f64 },
    #[error("boundary data has inconsistent shapes: {0}")]
    Shape(String),
    #[error("closed-manifold data (a third boundary map) is required")]
    MissingTopCell,
    #[error(transparent)]
    Torsion(#[from] TorsionError),
}

/// Coefficient module for the twisted complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    /// `F^2` with the defining action.
    Standard2,
    /// `sl_2` with the adjoint action, basis `H, E, F`.
    Adjoint3,
    /// `R` with the trivial action.
    Trivial1,
}

impl CoefficientKind {
    pub fn dim(self) -> usize {
        match self {
            CoefficientKind::Standard2 => 2,
            CoefficientKind::Adjoint3 => 3,
            CoefficientKind::Trivial1 => 1,
        }
    }
}

/// Boundary maps of `C_*(X~)` for a presentation complex, optionally closed
/// up by a single 3-cell.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainData {
    /// `g` entries `1 - x_i`.
    pub d1: Vec<GroupRingElt>,
    /// `g x r`, entry `(i, j)` is `∂r_j/∂x_i`.
    pub d2: Vec<Vec<GroupRingElt>>,
    /// `r` entries: the coefficient of `r_j` in the boundary of the 3-cell.
    pub d3: Option<Vec<GroupRingElt>>,
}

impl ChainData {
    pub fn new(d1: Vec<GroupRingElt>, d2: Vec<Vec<GroupRingElt>>, d3: Option<Vec<GroupRingElt>>) -> Result<Self, LocalError> {
        let g = d1.len();
        if d2.len() != g {
            return Err(LocalError::Shape(format!("{} rows in d2 for {g} generators", d2.len())));
        }
        let r = d2.first().map_or(0, Vec::len);
        if d2.iter().any(|row| row.len() != r) {
            return Err(LocalError::Shape("ragged d2".into()));
        }
        if let Some(top) = &d3 {
            if top.len() != r {
                return Err(LocalError::Shape(format!("d3 has {} entries for {r} relators", top.len())));
            }
        }
        Ok(ChainData { d1, d2, d3 })
    }

    /// The presentation 2-complex.
    pub fn from_presentation(p: &Presentation) -> Self {
        let b = boundary_matrices(p);
        ChainData { d1: b.d1, d2: b.d2, d3: None }
    }

    /// Presentation complex closed by a 3-cell with the given boundary.
    pub fn closed(p: &Presentation, d3: Vec<GroupRingElt>) -> Result<Self, LocalError> {
        let b = boundary_matrices(p);
        ChainData::new(b.d1, b.d2, Some(d3))
    }

    pub fn gens(&self) -> usize {
        self.d1.len()
    }

    pub fn relators(&self) -> usize {
        self.d2.first().map_or(0, Vec::len)
    }

    /// Number of cells in each dimension.
    pub fn cell_dims(&self) -> Vec<usize> {
        let mut v = vec![1, self.gens(), self.relators()];
        if self.d3.is_some() {
            v.push(1);
        }
        v
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_dims().iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }
}

/// Images of words under `ρ` in a coefficient module, memoised per word.
struct Evaluator<'a, S> {
    rho: &'a Rep<S>,
    kind: CoefficientKind,
    cache: HashMap<Word, Matrix<S>>,
}

impl<'a, S: Scalar + Copy> Evaluator<'a, S> {
    fn new(rho: &'a Rep<S>, kind: CoefficientKind) -> Self {
        Evaluator { rho, kind, cache: HashMap::new() }
    }

    fn word(&mut self, w: &Word) -> Result<Matrix<S>, LocalError> {
        if let Some(m) = self.cache.get(w) {
            return Ok(m.clone());
        }
        let m = match self.kind {
            CoefficientKind::Trivial1 => Matrix::identity(1),
            CoefficientKind::Standard2 => mat2_matrix(&self.rho.eval(w)?),
            CoefficientKind::Adjoint3 => adjoint_matrix(&self.rho.eval(w)?),
        };
        self.cache.insert(w.clone(), m.clone());
        Ok(m)
    }

    fn elt(&mut self, e: &GroupRingElt) -> Result<Matrix<S>, LocalError> {
        let n = self.kind.dim();
        let mut acc = Matrix::zeros(n, n);
        for (w, c) in e.terms() {
            let m = self.word(w)?;
            acc = acc.add(&m.scale(&S::from_i64(c))).expect("same size");
        }
        Ok(acc)
    }
}

fn mat2_matrix<S: Scalar + Copy>(g: &Mat2<S>) -> Matrix<S> {
    Matrix::new(2, 2, vec![g.a, g.b, g.c, g.d]).expect("2x2")
}

/// `Σ c_w ρ_kind(w)`.
pub fn evaluate_group_ring<S: Scalar + Copy>(
    e: &GroupRingElt,
    rho: &Rep<S>,
    kind: CoefficientKind,
) -> Result<Matrix<S>, LocalError> {
    Evaluator::new(rho, kind).elt(e)
}

/// Check that `ρ` kills every relator of `p` within `eps`.
pub fn check_relators<S: Scalar + Copy>(p: &Presentation, rho: &Rep<S>, eps: f64) -> Result<(), LocalError> {
    let res = rho.relator_residuals(p)?;
    match res.iter().position(|&r| r > eps) {
        Some(index) => Err(LocalError::RelatorViolated { index, residual: res[index] }),
        None => Ok(()),
    }
}

/// The twisted cochain complex. `ρ` is assumed to kill the relators (see
/// [`check_relators`]); a bad representation or a wrong `d3` shows up as a
/// failed `δ∘δ = 0` check at tolerance `eps`.
pub fn twisted_cochain_complex<S: Scalar + Copy>(
    cd: &ChainData,
    rho: &Rep<S>,
    kind: CoefficientKind,
    eps: f64,
) -> Result<BasedComplex<S>, LocalError> {
    let n = kind.dim();
    let (g, r) = (cd.gens(), cd.relators());
    let mut ev = Evaluator::new(rho, kind);

    let mut d0 = Matrix::zeros(n * g, n);
    for (i, e) in cd.d1.iter().enumerate() {
        d0.set_block(n * i, 0, &ev.elt(e)?);
    }
    let mut d1 = Matrix::zeros(n * r, n * g);
    for (i, row) in cd.d2.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            d1.set_block(n * j, n * i, &ev.elt(e)?);
        }
    }
    let mut dims = vec![n, n * g, n * r];
    let mut maps = vec![d0, d1];
    if let Some(top) = &cd.d3 {
        let mut d2 = Matrix::zeros(n, n * r);
        for (j, e) in top.iter().enumerate() {
            d2.set_block(0, n * j, &ev.elt(e)?);
        }
        dims.push(n);
        maps.push(d2);
    }
    let c = BasedComplex::new(dims, maps)?;
    c.check_complex(eps)?;
    Ok(c)
}

/// Real cellular cochain complex (trivial coefficients); no representation needed.
pub fn real_cochain_complex(cd: &ChainData) -> Result<BasedComplex<f64>, LocalError> {
    let trivial = Rep::sl2r(vec![Mat2::identity(); cd.gens()]);
    twisted_cochain_complex(cd, &trivial, CoefficientKind::Trivial1, 1e-12)
}

/// A representation of a closed 3-manifold group is transversal iff
/// `H^1_ρ(M; sl_2) = H^2_ρ(M; sl_2) = 0`. Points with a nontrivial
/// centraliser (`H^0 ≠ 0`) are reducible and never count as transversal.
pub fn transversality_check<S: Scalar + Copy>(
    p: &Presentation,
    cd: &ChainData,
    rho: &Rep<S>,
    eps: f64,
) -> Result<bool, LocalError> {
    if cd.d3.is_none() {
        return Err(LocalError::MissingTopCell);
    }
    check_relators(p, rho, RELATOR_EPS.max(eps))?;
    let c = twisted_cochain_complex(cd, rho, CoefficientKind::Adjoint3, eps)?;
    let h = c.cohomology_dims(eps)?;
    Ok(h[0] == 0 && h[1] == 0 && h[2] == 0)
}
