use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser, Serialize)]
#[command(name = "steklov", version, about = "Steklov spectra of spheroids, disks and spheres")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    /// Output format: JSON for `oracle`, CSV for everything else unless set.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write to this file (the manifest goes to `<file>.manifest.json`)
    /// instead of stdout (manifest on stderr).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Significant digits of floating-point CSV fields. Eigenvalue tables
    /// default to 4, everything else to full precision.
    #[arg(long, global = true)]
    pub precision: Option<usize>,
}

impl OutputArgs {
    /// The same options with the format filled in for `command`.
    pub fn resolved(&self, command: &Command) -> OutputArgs {
        let default = match command {
            Command::Oracle(_) => Format::Json,
            _ => Format::Csv,
        };
        OutputArgs {
            format: Some(self.format.unwrap_or(default)),
            ..self.clone()
        }
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or(Format::Csv)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeArg {
    Prolate,
    Oblate,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionArg {
    Exterior,
    Interior,
    Shell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BcArg {
    Dirichlet,
    Neumann,
}

/// Boundary and domain. Lengths are in units of `b` unless `--b` is given.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GeometryArgs {
    #[arg(long, value_enum, default_value_t = ShapeArg::Prolate)]
    pub shape: ShapeArg,
    #[arg(long, value_enum, default_value_t = RegionArg::Exterior)]
    pub region: RegionArg,
    /// Minor semi-axis (0 with `--shape oblate` is the disk; ignored for the sphere).
    #[arg(long, default_value_t = 0.5)]
    pub a: f64,
    /// Major semi-axis, or the radius of the sphere.
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Outer minor semi-axis of a confocal shell.
    #[arg(long = "outer-a")]
    pub outer_a: Option<f64>,
    /// Outer major semi-axis of a confocal shell.
    #[arg(long = "outer-b")]
    pub outer_b: Option<f64>,
    /// Condition on the outer surface of a shell.
    #[arg(long = "outer-bc", value_enum)]
    pub outer_bc: Option<BcArg>,
    /// Truncation order (default 10, or 20 for the disk).
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Eigenvalues mu_mn, or the aspect-ratio tables of the prolate and oblate exteriors.
    Eigs(EigsArgs),
    /// Sampled eigenfunction v_mn on the boundary, optionally its harmonic extension.
    Eigfun(EigfunArgs),
    /// Diffusive flux ratio J_q / J_inf onto a partially reactive exterior boundary.
    Flux(FluxArgs),
    /// Crossing probability P(l) of the boundary local time.
    Crossing(CrossingArgs),
    /// Eigenvalues against the truncation order.
    Convergence(ConvergenceArgs),
    /// Independent verification checks.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EigsArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Only the block of this azimuthal order (|m| is used).
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Prolate exterior, a/b = 0.1..1.0: mu00 mu01 mu02 mu11 mu12 mu22 per row.
    #[arg(long, conflicts_with = "table2")]
    pub table1: bool,
    /// Oblate exterior, a/b = 0.0..1.0, same columns.
    #[arg(long)]
    pub table2: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EigfunArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long)]
    pub n: usize,
    /// Equispaced samples of theta over its full range.
    #[arg(long = "n-theta", default_value_t = 61)]
    pub n_theta: usize,
    /// Equispaced samples of phi over [0, 2 pi).
    #[arg(long = "n-phi", default_value_t = 2)]
    pub n_phi: usize,
    /// Also evaluate the harmonic extension on the coordinate surface
    /// `alpha` (the radius for the sphere).
    #[arg(long)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FluxArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Smallest q b of the log grid.
    #[arg(long = "qb-min", default_value_t = 1e-3)]
    pub qb_min: f64,
    /// Largest q b of the log grid.
    #[arg(long = "qb-max", default_value_t = 1e4)]
    pub qb_max: f64,
    #[arg(long = "qb-count", default_value_t = 61)]
    pub qb_count: usize,
    /// Sweep a/b instead: rows (a/b, q b, ratio) for each `--qb` value.
    #[arg(long = "sweep-aspect")]
    pub sweep_aspect: bool,
    /// Values of q b for the aspect sweep.
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 1.0, 10.0])]
    pub qb: Vec<f64>,
    /// Values of a/b for the aspect sweep (default 0.05..0.95, and 0 for oblate).
    #[arg(long, value_delimiter = ',')]
    pub aspects: Vec<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CrossingArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Number of log-spaced thresholds l/b over [l-min, l-max].
    #[arg(long = "l-count", default_value_t = 60)]
    pub l_count: usize,
    #[arg(long = "l-min", default_value_t = 1e-3)]
    pub l_min: f64,
    #[arg(long = "l-max", default_value_t = 10.0)]
    pub l_max: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConvergenceArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,
    /// Number of lowest modes (m >= 0) to follow.
    #[arg(long, default_value_t = 6)]
    pub modes: usize,
    /// Smallest truncation order; the largest is `--n-max`.
    #[arg(long = "n-min", default_value_t = 4)]
    pub n_min: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleCheck {
    /// Recurrence against adaptive quadrature for m, n, n' <= 10.
    Coupling,
    /// Walk-on-spheres hit probabilities: sphere, disk axis, prolate far field.
    Wos,
    /// Finite-difference Steklov residuals.
    Residual,
    /// Surface quadrature: areas and the Gram matrix.
    Quadrature,
    All,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub check: OracleCheck,
    /// Walks per Monte Carlo estimate.
    #[arg(long, default_value_t = 1_000_000)]
    pub walks: u64,
    /// Root seed; required by the Monte Carlo checks.
    #[arg(long)]
    pub seed: Option<u64>,
}
