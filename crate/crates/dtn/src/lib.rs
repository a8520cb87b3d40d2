//! Dirichlet-to-Neumann spectra of prolate and oblate spheroids.
//!
//! The operator is represented on normalized spherical harmonics and splits
//! into independent blocks, one per azimuthal order `m`. Each block is
//! symmetrized as `c^{1/2} F c^{1/2}` and diagonalized; the thin-disk limit
//! goes through the inverse (Neumann-to-Dirichlet) operator instead.
//!
//! ```
//! use steklov_dtn::{solve_spectrum, ProblemSpec, Shape};
//!
//! let s = solve_spectrum(&ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0), 10).unwrap();
//! assert!((s.mu(0, 0).unwrap() - 1.516).abs() < 1e-3);
//! ```

mod block;
mod eval;
mod geometry;
mod radial;
mod spectrum;

pub use block::{
    assemble_block, disk_ntd_block, hermiticity_defect, solve_block, solve_ntd, BlockSolution, NtdBlock,
    OperatorBlock, Parity, HERMITICITY_TOLERANCE, ZERO_MODE_TOLERANCE,
};
pub use eval::{spherical_harmonic, TRACE_TOLERANCE};
pub use geometry::{
    geometry, Geometry, OuterBc, OuterSurface, ProblemSpec, Region, Shape, SpheroidalPoint, CONFOCAL_TOLERANCE,
    DISK_THRESHOLD, NEAR_SPHERE_RATIO,
};
pub use radial::{coefficients, coefficients_from, radial_values, Coefficients, RadialValues, IMAG_RESIDUE_TOLERANCE};
pub use spectrum::{
    classify_halfspace, solve_spectrum, solve_spectrum_with, sphere_spectrum, Eigenpair, HalfspaceClass, ModeIndex,
    Route, Spectrum, DEFAULT_N_MAX, DISK_N_MAX,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DtnError {
    #[error("invalid geometry: {0}")]
    Geometry(String),
    #[error("a/b = {ratio} exceeds the near-sphere limit; use the sphere branch")]
    NearSphere { ratio: f64 },
    #[error("shell is not confocal: relative mismatch {mismatch:e} in b^2 - a^2 = B^2 - A^2")]
    Confocality { mismatch: f64 },
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("ill-conditioned coefficient (m, n) = ({m}, {n}): {detail}")]
    IllConditioned { m: usize, n: usize, detail: String },
    #[error("coefficient (m, n) = ({m}, {n}) has relative imaginary part {residue:e}")]
    ImaginaryResidue { m: usize, n: usize, residue: f64 },
    #[error("block m = {m} is not symmetric: relative defect {defect:e}")]
    Hermiticity { m: usize, defect: f64 },
    #[error("numerical integrity: {0}")]
    Integrity(String),
    #[error("no mode (m, n) = ({m}, {n}) in this spectrum")]
    UnknownMode { m: i64, n: usize },
    #[error("alpha = {alpha} outside the domain [{lo}, {hi}]")]
    OutOfRange { alpha: f64, lo: f64, hi: f64 },
    #[error("block m = {m}: {source}")]
    Block { m: usize, source: Box<DtnError> },
    #[error(transparent)]
    Legendre(#[from] steklov_legendre::LegendreError),
    #[error(transparent)]
    Coupling(#[from] steklov_coupling::CouplingError),
}

impl DtnError {
    /// Whether the failure comes from the input rather than the numerics.
    pub fn is_invalid_input(&self) -> bool {
        match self {
            DtnError::Geometry(_)
            | DtnError::NearSphere { .. }
            | DtnError::Confocality { .. }
            | DtnError::Unsupported(_)
            | DtnError::UnknownMode { .. }
            | DtnError::OutOfRange { .. } => true,
            DtnError::Block { source, .. } => source.is_invalid_input(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, DtnError>;
