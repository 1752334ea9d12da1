use fox_words::{Presentation, Word};
use scalar_matrix::Scalar;
use serde::{Deserialize, Serialize};

use crate::{Mat2, RepError};

/// Which group the images live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    Sl2R,
    Su2,
}

/// A homomorphism from a free group, given by the images of `x_1, x_2, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep<S> {
    images: Vec<Mat2<S>>,
    flavor: Flavor,
}

impl<S: Scalar + Copy> Rep<S> {
    pub fn new(images: Vec<Mat2<S>>, flavor: Flavor) -> Self {
        Rep { images, flavor }
    }

    pub fn images(&self) -> &[Mat2<S>] {
        &self.images
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn gens(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based generator `x_gen`.
    pub fn image(&self, gen: usize) -> Result<&Mat2<S>, RepError> {
        gen.checked_sub(1)
            .and_then(|i| self.images.get(i))
            .ok_or(RepError::UnknownGenerator { gen, gens: self.images.len() })
    }

    pub fn eval(&self, w: &Word) -> Result<Mat2<S>, RepError> {
        let mut acc = Mat2::identity();
        for l in w.letters() {
            let g = self.image(l.gen)?;
            acc = acc * if l.exp > 0 { *g } else { g.inverse() };
        }
        Ok(acc)
    }

    /// The representation `g ρ g^{-1}`.
    pub fn conjugate(&self, g: &Mat2<S>) -> Self {
        Rep { images: self.images.iter().map(|h| g.conjugate(h)).collect(), flavor: self.flavor }
    }

    /// Entrywise distance of each relator image from the identity.
    pub fn relator_residuals(&self, p: &Presentation) -> Result<Vec<f64>, RepError> {
        if self.images.len() != p.gens() {
            return Err(RepError::GeneratorCount { expected: p.gens(), got: self.images.len() });
        }
        p.relators().iter().map(|r| Ok(self.eval(r)?.dist(&Mat2::identity()))).collect()
    }

    /// Index of the first relator whose image differs from the identity by more than `eps`.
    pub fn first_violated_relator(&self, p: &Presentation, eps: f64) -> Result<Option<usize>, RepError> {
        Ok(self.relator_residuals(p)?.iter().position(|&r| r > eps))
    }
}

/// True iff every relator maps to the identity within entrywise `eps`.
pub fn verify_relators<S: Scalar + Copy>(p: &Presentation, rho: &Rep<S>, eps: f64) -> bool {
    matches!(rho.first_violated_relator(p, eps), Ok(None))
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    gens: Vec<[[f64; 2]; 2]>,
}

impl Rep<f64> {
    pub fn sl2r(images: Vec<Mat2<f64>>) -> Self {
        Rep::new(images, Flavor::Sl2R)
    }

    /// Parse `{"gens": [[[a,b],[c,d]], ...]}`; every image must have unit determinant.
    pub fn from_json(text: &str) -> Result<Self, RepError> {
        let raw: RepJson = serde_json::from_str(text).map_err(|e| RepError::Json(e.to_string()))?;
        let images: Vec<Mat2<f64>> =
            raw.gens.iter().map(|[[a, b], [c, d]]| Mat2::new(*a, *b, *c, *d)).collect();
        for (i, g) in images.iter().enumerate() {
            let tol = 1e-8 * g.max_abs().powi(2).max(1.0);
            if (g.det() - 1.0).abs() > tol {
                return Err(RepError::Determinant { gen: i + 1, det: g.det() });
            }
        }
        Ok(Rep::sl2r(images))
    }

    pub fn to_json(&self) -> String {
        let raw = RepJson { gens: self.images.iter().map(|g| [[g.a, g.b], [g.c, g.d]]).collect() };
        serde_json::to_string(&raw).expect("plain numbers serialize")
    }
}
