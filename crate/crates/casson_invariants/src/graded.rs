use chern_simons::ModOne;

/// How representations are graded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// `24 l(f_* O')` in `R/Z`.
    Cs24,
    /// The refined torsion `τ⁰_f(M)` in `R^×`.
    TorsionValue,
}

/// Grades closer than this are merged (circularly for [`Grading::Cs24`]).
pub const GRADE_TOLERANCE: f64 = 1e-6;

/// A finite sum `Σ n_i [t_i]` in `Z[R/Z]` or `Z[R^×]`, sorted by grade.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedInvariant {
    grading: Grading,
    terms: Vec<(f64, i64)>,
}

impl GradedInvariant {
    pub fn new(grading: Grading) -> Self {
        GradedInvariant { grading, terms: Vec::new() }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn terms(&self) -> &[(f64, i64)] {
        &self.terms
    }

    fn close(&self, a: f64, b: f64) -> bool {
        match self.grading {
            Grading::Cs24 => ModOne::new(a).dist(ModOne::new(b)) < GRADE_TOLERANCE,
            Grading::TorsionValue => (a - b).abs() < GRADE_TOLERANCE,
        }
    }

    /// Add `coeff · [grade]`, merging with an existing grade within tolerance.
    pub fn add(&mut self, grade: f64, coeff: i64) {
        let grade = match self.grading {
            Grading::Cs24 => ModOne::new(grade).value(),
            Grading::TorsionValue => grade,
        };
        match self.terms.iter().position(|&(g, _)| self.close(g, grade)) {
            Some(i) => self.terms[i].1 += coeff,
            None => self.terms.push((grade, coeff)),
        }
        self.terms.retain(|&(_, c)| c != 0);
        self.terms.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    /// Coefficient at `grade`, zero if absent.
    pub fn coefficient(&self, grade: f64) -> i64 {
        self.terms.iter().find(|&&(g, _)| self.close(g, grade)).map_or(0, |&(_, c)| c)
    }

    /// Image under the augmentation `Z[K] -> Z`.
    pub fn total(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }
}
