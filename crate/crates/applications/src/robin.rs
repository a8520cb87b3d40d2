use crate::capacity::capacity_from_spectrum;
use crate::{AppError, Result};
use std::f64::consts::PI;
use steklov_dtn::{radial_values, solve_spectrum, spherical_harmonic, ProblemSpec, RadialValues, Spectrum, SpheroidalPoint};

/// Diffusion towards a partially reactive target held in a bath of
/// concentration `c0` at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinParams {
    pub diffusion: f64,
    pub c0: f64,
    pub kappa: f64,
}

impl RobinParams {
    pub fn new(diffusion: f64, c0: f64, kappa: f64) -> Result<Self> {
        if !(diffusion > 0.0) || !(c0 >= 0.0) || !(kappa >= 0.0) || !c0.is_finite() {
            return Err(AppError::Domain(format!(
                "need D > 0, C0 >= 0, kappa >= 0 (got D = {diffusion}, C0 = {c0}, kappa = {kappa})"
            )));
        }
        Ok(RobinParams { diffusion, c0, kappa })
    }

    /// Unit diffusion and bath concentration with `kappa = q`.
    pub fn with_q(q: f64) -> Result<Self> {
        Self::new(1.0, 1.0, q)
    }

    /// `q = kappa / D`.
    pub fn q(&self) -> f64 {
        self.kappa / self.diffusion
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxResult {
    /// Flux onto a perfect sink, `D C0 C`.
    pub j_inf: f64,
    pub j_q: f64,
    /// `J_q / J_inf`.
    pub ratio: f64,
    pub capacity: f64,
}

/// `[(M~ + q)^{-1}]_{n0,00}` for the axisymmetric block, `n = 0..=n_max`.
fn resolvent_column(s: &Spectrum, q: f64) -> Vec<f64> {
    let block = &s.blocks()[0];
    let mut col = vec![0.0; block.len()];
    for p in block {
        let w = p.v_tilde[0] / (p.mu + q);
        for (c, v) in col.iter_mut().zip(p.v_tilde.iter()) {
            *c += w * v;
        }
    }
    col
}

fn check_exterior(s: &Spectrum, what: &'static str) -> Result<()> {
    if s.problem.is_exterior() {
        Ok(())
    } else {
        Err(AppError::NotApplicable(what))
    }
}

pub fn robin_flux_from(s: &Spectrum, params: &RobinParams) -> Result<FluxResult> {
    check_exterior(s, "the Robin flux")?;
    let q = params.q();
    let capacity = capacity_from_spectrum(s)?;
    let ratio = if q.is_infinite() { 1.0 } else { q * resolvent_column(s, q)[0] };
    let j_inf = params.diffusion * params.c0 * capacity;
    Ok(FluxResult {
        j_inf,
        j_q: j_inf * ratio,
        ratio,
        capacity,
    })
}

pub fn robin_flux(spec: &ProblemSpec, params: &RobinParams, n_max: usize) -> Result<FluxResult> {
    robin_flux_from(&solve_spectrum(spec, n_max)?, params)
}

/// Boundary coefficients `f_n` of `u = 1 - C/C0` on `Y_{0n}` and the
/// harmonic extension of `u`.
#[derive(Debug, Clone)]
pub struct RobinSolution {
    pub params: RobinParams,
    /// `f_{0n}`, `n = 0..=n_max`; all orders `m != 0` vanish.
    pub f: Vec<f64>,
    /// Set when `q = 0`: nothing is absorbed and `u` vanishes.
    pub trivial: bool,
    pub flux: FluxResult,
    spectrum: Spectrum,
}

pub fn robin_solution_from(s: &Spectrum, params: &RobinParams) -> Result<RobinSolution> {
    let flux = robin_flux_from(s, params)?;
    let q = params.q();
    let c = s.coefficients.row(0);
    let f = if q == 0.0 {
        vec![0.0; c.len()]
    } else if q.is_infinite() {
        // Perfect sink: u = 1 on the boundary.
        let mut f = vec![0.0; c.len()];
        f[0] = (4.0 * PI).sqrt();
        f
    } else {
        resolvent_column(s, q)
            .iter()
            .zip(c)
            .map(|(r, cn)| (4.0 * PI).sqrt() * q * (c[0] / cn).sqrt() * r)
            .collect()
    };
    Ok(RobinSolution {
        params: *params,
        f,
        trivial: q == 0.0,
        flux,
        spectrum: s.clone(),
    })
}

pub fn robin_solution(spec: &ProblemSpec, params: &RobinParams, n_max: usize) -> Result<RobinSolution> {
    robin_solution_from(&solve_spectrum(spec, n_max)?, params)
}

impl RobinSolution {
    pub fn coefficient(&self, m: i64, n: usize) -> f64 {
        if m == 0 {
            self.f.get(n).copied().unwrap_or(0.0)
        } else {
            0.0
        }
    }

    fn sum(&self, theta: f64, radial: Option<(&RadialValues, &RadialValues)>) -> f64 {
        let x = self.spectrum.geometry.angular_arg(theta);
        self.f
            .iter()
            .enumerate()
            .map(|(n, f)| {
                let r = radial.map_or(1.0, |(at, boundary)| (at.value(n, 0) / boundary.value(n, 0)).re);
                f * spherical_harmonic(0, n, x, 0.0).re * r
            })
            .sum()
    }

    /// `u = 1 - C/C0` on the boundary.
    pub fn boundary_u(&self, theta: f64) -> f64 {
        self.sum(theta, None)
    }

    /// `u` at a point of the exterior domain.
    pub fn u(&self, point: SpheroidalPoint) -> Result<f64> {
        let g = &self.spectrum.geometry;
        let a0 = g.boundary_alpha();
        if !(point.alpha >= a0 * (1.0 - 1e-12)) {
            return Err(AppError::Domain(format!("alpha = {} lies inside the target (alpha0 = {a0})", point.alpha)));
        }
        let n_max = self.f.len() - 1;
        let region = &self.spectrum.problem.region;
        let boundary = radial_values(g, region, n_max, a0)?;
        let at = radial_values(g, region, n_max, point.alpha.max(a0))?;
        Ok(self.sum(point.theta, Some((&at, &boundary))))
    }

    /// Concentration `C0 (1 - u)`.
    pub fn concentration(&self, point: SpheroidalPoint) -> Result<f64> {
        Ok(self.params.c0 * (1.0 - self.u(point)?))
    }

    /// Total flux `D C0 q (|dOmega| - (1, u))` by surface quadrature.
    pub fn integrated_flux(&self, n_theta: usize) -> f64 {
        let g = &self.spectrum.geometry;
        let (lo, hi) = g.theta_range();
        let rule = steklov_numerics::GaussLegendre::new(n_theta);
        let absorbed: f64 = rule
            .mapped(lo, hi)
            .map(|(t, w)| w * 2.0 * PI * g.area_element(t) * (1.0 - self.boundary_u(t)))
            .sum();
        self.params.diffusion * self.params.c0 * self.params.q() * absorbed
    }
}
