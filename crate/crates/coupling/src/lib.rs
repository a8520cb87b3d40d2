//! Coupling integrals
//!
//! ```text
//! H^m_{n,n'}(z) = \int_{-1}^{1} f(x^2) P_n^m(x) P_{n'}^m(x) dx
//! ```
//!
//! for the three weights used by the spheroidal Dirichlet-to-Neumann
//! matrices:
//!
//! | kind            | weight `f`            | admissible `z` |
//! |-----------------|-----------------------|----------------|
//! | [`Kind::F`]     | `1/sqrt(z^2 - x^2)`   | `z > 1`        |
//! | [`Kind::FBar`]  | `1/sqrt(z^2 + x^2)`   | `z > 0`        |
//! | [`Kind::GBar`]  | `sqrt(z^2 + x^2)`     | `z >= 0`       |
//!
//! Tables are built from two closed-form seeds by three-term recurrences in
//! double-double arithmetic, then spot-checked against adaptive quadrature.
//! Any `m`-slice that fails the check is rebuilt by quadrature.

mod kind;
mod quadrature;
mod recurrence;
mod table;

pub use kind::{seed_values, Kind};
pub use quadrature::{quadrature_oracle, quadrature_slice, segment_column_dd};
pub use recurrence::{axis_depth, fill_axis, fill_table, AxisColumns, Scalar};
pub use table::{
    build, build_quadrature, build_recurrence, continuation_fbar, BuildMode, CouplingTable,
    GateReport, GATE_TOLERANCE,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CouplingError {
    #[error("{kind:?} requires {requirement}, got z = {z}")]
    Domain { kind: Kind, z: f64, requirement: &'static str },
    #[error("F-bar integrals diverge logarithmically at z = 0; use the G-bar (Neumann-to-Dirichlet) route")]
    Divergent,
    #[error("axis columns reach depth {available}, table of order {n_max} needs {needed}")]
    InsufficientSeeds { n_max: usize, needed: usize, available: usize },
    #[error("quadrature oracle failed for (m, n, n') = ({m}, {n}, {np}): {source}")]
    Oracle {
        m: usize,
        n: usize,
        np: usize,
        source: steklov_numerics::QuadError,
    },
}

pub type Result<T> = std::result::Result<T, CouplingError>;
