use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;

/// Default tolerance for rank decisions and relator checks on the float backend.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Environment variable overriding the tolerance.
pub const EPS_ENV: &str = "SL2CASSON_EPS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Float,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub eps: f64,
    pub backend: Backend,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    /// `eps` defaults to [`DEFAULT_EPS`] on the float backend and to 0 on the
    /// exact one; an explicit value must be positive (float) or zero (exact).
    pub fn new(eps: Option<f64>, backend: Backend, output: Option<PathBuf>, seed: u64, format: Format) -> Result<Self> {
        let eps = match (backend, eps) {
            (Backend::Float, None) => DEFAULT_EPS,
            (Backend::Exact, None) => 0.0,
            (Backend::Float, Some(e)) if e > 0.0 && e.is_finite() => e,
            (Backend::Exact, Some(e)) if e == 0.0 => 0.0,
            (Backend::Float, Some(e)) => bail!("float backend needs a positive tolerance, got {e}"),
            (Backend::Exact, Some(e)) => bail!("exact backend needs tolerance 0, got {e}"),
        };
        Ok(RunConfig { eps, backend, output, seed, format })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { eps: DEFAULT_EPS, backend: Backend::Float, output: None, seed: 1, format: Format::Json }
    }
}
