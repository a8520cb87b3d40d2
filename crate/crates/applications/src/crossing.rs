use crate::capacity::capacity_from_spectrum;
use crate::{AppError, Result};
use steklov_dtn::{solve_spectrum, ProblemSpec, Spectrum, SpheroidalPoint};

/// `P(l)`: probability that the boundary local time accumulated by a walker
/// started uniformly on the boundary exceeds `l`, and its density `rho`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingCurve {
    pub thresholds: Vec<f64>,
    pub probabilities: Vec<f64>,
    pub density: Vec<f64>,
    pub surface_area: f64,
    pub capacity: f64,
}

/// Log-spaced thresholds `l/b` over `[1e-3, 10]`.
pub fn default_thresholds(b: f64, count: usize) -> Vec<f64> {
    let (lo, hi) = (1e-3f64.ln(), 10f64.ln());
    (0..count)
        .map(|i| b * (lo + (hi - lo) * i as f64 / (count.max(2) - 1) as f64).exp())
        .collect()
}

fn check_thresholds(thresholds: &[f64]) -> Result<()> {
    match thresholds.iter().find(|l| !(**l >= 0.0)) {
        Some(l) => Err(AppError::Domain(format!("threshold {l} is negative"))),
        None => Ok(()),
    }
}

pub fn crossing_curve(s: &Spectrum, thresholds: &[f64]) -> Result<CrossingCurve> {
    if !s.problem.is_exterior() {
        return Err(AppError::NotApplicable("the crossing probability"));
    }
    check_thresholds(thresholds)?;
    let capacity = capacity_from_spectrum(s)?;
    let area = s.geometry.surface_area();
    let pref = capacity / area;
    let weights: Vec<(f64, f64)> = s.blocks()[0].iter().map(|p| (p.mu, p.v_tilde[0] * p.v_tilde[0])).collect();
    let mut probabilities = Vec::with_capacity(thresholds.len());
    let mut density = Vec::with_capacity(thresholds.len());
    for &l in thresholds {
        let (mut p, mut r) = (0.0, 0.0);
        for &(mu, w) in &weights {
            let e = (-mu * l).exp();
            p += w * e / mu;
            r += w * e;
        }
        probabilities.push(pref * p);
        density.push(pref * r);
    }
    Ok(CrossingCurve {
        thresholds: thresholds.to_vec(),
        probabilities,
        density,
        surface_area: area,
        capacity,
    })
}

pub fn crossing_probability(spec: &ProblemSpec, thresholds: &[f64], n_max: usize) -> Result<CrossingCurve> {
    crossing_curve(&solve_spectrum(spec, n_max)?, thresholds)
}

/// `P_x0(l)` for a walker started at `point`: `sum_k (1, v_k) V_k(x0) e^{-mu_k l}`
/// over normalized eigenfunctions. At `l = 0` this is the probability of
/// ever reaching the boundary.
pub fn crossing_probability_at(s: &Spectrum, point: SpheroidalPoint, thresholds: &[f64]) -> Result<Vec<f64>> {
    if !s.problem.is_exterior() {
        return Err(AppError::NotApplicable("the crossing probability"));
    }
    check_thresholds(thresholds)?;
    let mut terms = Vec::new();
    for p in &s.blocks()[0] {
        let v = s.eval_steklov(0, p.n, point)?;
        terms.push((p.mu, p.normalized_projection() * v.re));
    }
    Ok(thresholds
        .iter()
        .map(|&l| terms.iter().map(|&(mu, w)| w * (-mu * l).exp()).sum())
        .collect())
}
