//! Physical quantities built on spheroidal Steklov spectra: harmonic
//! capacity, diffusive flux onto a partially reactive target, the
//! distribution of the boundary local time, and closed forms for a disk in
//! a reflecting or absorbing plane.

mod capacity;
mod crossing;
mod disk;
mod robin;

pub use capacity::{capacity, capacity_from_spectrum, surface_area};
pub use crossing::{crossing_probability, crossing_probability_at, crossing_curve, default_thresholds, CrossingCurve};
pub use disk::{
    disk_halfspace_solve, disk_harmonic_measure, disk_weber_potential, DiskSolution, HalfspaceParity,
};
pub use robin::{robin_flux, robin_flux_from, robin_solution, robin_solution_from, FluxResult, RobinParams, RobinSolution};

use steklov_dtn::DtnError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AppError {
    #[error("{0} is defined for exterior problems only")]
    NotApplicable(&'static str),
    #[error("{0}")]
    Domain(String),
    #[error("boundary data are not {expected} under z -> -z (defect {defect:e})")]
    ParityMismatch { expected: &'static str, defect: f64 },
    #[error(transparent)]
    Dtn(#[from] DtnError),
    #[error(transparent)]
    Legendre(#[from] steklov_legendre::LegendreError),
    #[error(transparent)]
    Quadrature(#[from] steklov_numerics::QuadError),
}

impl AppError {
    pub fn is_invalid_input(&self) -> bool {
        match self {
            AppError::NotApplicable(_) | AppError::Domain(_) | AppError::ParityMismatch { .. } => true,
            AppError::Dtn(e) => e.is_invalid_input(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
