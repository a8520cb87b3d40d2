//! Verification paths that do not share code with the spectral solver:
//! walk-on-spheres Monte Carlo for exterior hitting probabilities,
//! finite-difference Steklov residuals, tensor-product surface quadrature
//! and the coupling-integral gate against adaptive quadrature.
//!
//! Every check produces an [`OracleReport`]; a run collects them in an
//! append-only [`OracleLog`].

mod distance;
mod report;
mod residual;
mod wos;

pub use distance::Spheroid;
pub use report::{OracleLog, OracleReport, ToleranceKind};
pub use residual::{coupling_gate, gram_defect, steklov_residual, surface_quadrature, MIN_RESOLUTION};
pub use wos::{wos_hit_probability, WalkConfig, WosEstimate};

use steklov_applications::AppError;
use steklov_coupling::CouplingError;
use steklov_dtn::DtnError;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("quadrature grid of resolution {resolution} is degenerate (need at least {MIN_RESOLUTION})")]
    DegenerateGrid { resolution: usize },
    #[error(transparent)]
    Dtn(#[from] DtnError),
    #[error(transparent)]
    App(#[from] AppError),
    #[error(transparent)]
    Coupling(#[from] CouplingError),
}

impl OracleError {
    pub fn is_invalid_input(&self) -> bool {
        match self {
            OracleError::Domain(_) | OracleError::DegenerateGrid { .. } => true,
            OracleError::Dtn(e) => e.is_invalid_input(),
            OracleError::App(e) => e.is_invalid_input(),
            OracleError::Coupling(_) => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, OracleError>;
