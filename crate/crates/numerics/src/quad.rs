//! Gauss-Legendre rules and adaptive integrators.
//!
//! Nodes are computed by Newton iteration on the three-term Legendre
//! recurrence. The f64 adaptive integrator uses the Gauss-Kronrod 7/15 pair;
//! the double-double one compares 16- and 24-point Gauss rules per panel.

use crate::dd::Dd;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("adaptive quadrature did not converge: estimate {estimate:e}, error {error:e} after {evals} evaluations")]
    NoConvergence { estimate: f64, error: f64, evals: usize },
    #[error("integrand returned a non-finite value at x = {0}")]
    NonFinite(f64),
    #[error("invalid interval or tolerance")]
    BadInput,
}

/// Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    /// Apply the rule on [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let h = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + h * x))
            .sum::<f64>()
            * h
    }

    /// Nodes and weights mapped to [a, b].
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let h = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + h * x, w * h))
    }
}

/// Gauss-Legendre rule on [-1, 1] with double-double nodes and weights.
#[derive(Debug, Clone)]
pub struct GaussLegendreDd {
    pub nodes: Vec<Dd>,
    pub weights: Vec<Dd>,
}

impl GaussLegendreDd {
    pub fn new(n: usize) -> Self {
        let seed = GaussLegendre::new(n);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for &x0 in &seed.nodes {
            let mut x = Dd::new(x0);
            let mut dp = Dd::ONE;
            for _ in 0..3 {
                let (mut p0, mut p1) = (Dd::ONE, x);
                for k in 2..=n {
                    let p2 = (x * p1 * (2 * k - 1) as f64 - p0 * (k - 1) as f64) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = (x * p1 - p0) * n as f64 / (x * x - 1.0);
                x -= p1 / dp;
            }
            nodes.push(x);
            weights.push(Dd::new(2.0) / ((Dd::ONE - x * x) * dp * dp));
        }
        GaussLegendreDd { nodes, weights }
    }

    pub fn integrate<F: FnMut(Dd) -> Dd>(&self, a: Dd, b: Dd, mut f: F) -> Dd {
        let h = (b - a).ldexp(-1);
        let mid = (a + b).ldexp(-1);
        let mut s = Dd::ZERO;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + h * x);
        }
        s * h
    }
}

fn dd_rules() -> &'static (GaussLegendreDd, GaussLegendreDd) {
    static RULES: OnceLock<(GaussLegendreDd, GaussLegendreDd)> = OnceLock::new();
    RULES.get_or_init(|| (GaussLegendreDd::new(16), GaussLegendreDd::new(24)))
}

/// Adaptive integration in double-double precision.
///
/// A panel is accepted when the 16- and 24-point Gauss results agree to
/// `rel_tol * max(|I|, floor)`, where `floor` is an absolute scale. The target
/// never drops below `1e-30` of the integral of `|f|`.
pub fn adaptive_dd<F: FnMut(Dd) -> Dd>(
    mut f: F,
    a: Dd,
    b: Dd,
    rel_tol: f64,
    floor: f64,
    max_panels: usize,
) -> Result<Dd, QuadError> {
    let (g16, g24) = dd_rules();
    let whole = g24.integrate(a, b, &mut f);
    // Below ~1e-30 of the absolute integral the arithmetic itself is noise.
    let magnitude = g24.integrate(a, b, |t| f(t).abs()).to_f64();
    let scale = whole.abs().to_f64().max(floor).max(1e-30 * magnitude / rel_tol.max(1e-300));
    let width = (b - a).to_f64().abs();
    let mut stack = vec![(a, b)];
    let mut total = Dd::ZERO;
    let mut panels = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        panels += 1;
        let coarse = g16.integrate(lo, hi, &mut f);
        let fine = g24.integrate(lo, hi, &mut f);
        if !fine.is_finite() {
            return Err(QuadError::NonFinite(lo.to_f64()));
        }
        let err = (fine - coarse).abs().to_f64();
        let share = ((hi - lo).to_f64().abs() / width).max(1e-6);
        if err <= rel_tol * scale * share || panels > max_panels {
            if panels > max_panels {
                return Err(QuadError::NoConvergence {
                    estimate: (total + fine).to_f64(),
                    error: err,
                    evals: panels * 40,
                });
            }
            total += fine;
        } else {
            let mid = (lo + hi).ldexp(-1);
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    Ok(total)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64), QuadError> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    if !fc.is_finite() {
        return Err(QuadError::NonFinite(c));
    }
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        if !f1.is_finite() || !f2.is_finite() {
            return Err(QuadError::NonFinite(c - x));
        }
        k += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            g += WG[j / 2] * (f1 + f2);
        }
    }
    Ok((k * h, ((k - g) * h).abs()))
}

/// Adaptive Gauss-Kronrod 7/15 on a finite interval.
///
/// Returns the integral and an error estimate; fails when the error budget is
/// not met within `max_evals` integrand evaluations.
pub fn adaptive_gk<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<(f64, f64), QuadError> {
    if !(a.is_finite() && b.is_finite()) || abs_tol < 0.0 || rel_tol < 0.0 {
        return Err(QuadError::BadInput);
    }
    if a == b {
        return Ok((0.0, 0.0));
    }
    let mut intervals = vec![{
        let (v, e) = gk15(&mut f, a, b)?;
        (a, b, v, e)
    }];
    let mut evals = 15;
    loop {
        let total: f64 = intervals.iter().map(|i| i.2).sum();
        let err: f64 = intervals.iter().map(|i| i.3).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok((total, err));
        }
        if evals >= max_evals {
            return Err(QuadError::NoConvergence {
                estimate: total,
                error: err,
                evals,
            });
        }
        let (idx, _) = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (lo, hi, _, _) = intervals.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&mut f, lo, mid)?;
        let (v2, e2) = gk15(&mut f, mid, hi)?;
        evals += 30;
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
    }
}

/// Adaptive Gauss-Kronrod on [a, inf) through x = a + t/(1-t).
pub fn adaptive_gk_semi_infinite<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<(f64, f64), QuadError> {
    adaptive_gk(
        |t| {
            if t >= 1.0 {
                return 0.0;
            }
            let s = 1.0 - t;
            f(a + t / s) / (s * s)
        },
        0.0,
        1.0,
        abs_tol,
        rel_tol,
        max_evals,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(10);
        let v = rule.integrate(0.0, 2.0, |x| x.powi(19));
        assert!((v - 2f64.powi(20) / 20.0).abs() < 1e-9);
        let w: f64 = rule.weights.iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
    }

    #[test]
    fn dd_rule_reaches_double_double_accuracy() {
        let rule = GaussLegendreDd::new(24);
        let v = rule.integrate(Dd::ZERO, Dd::ONE, |x| x.powi(30));
        assert!((v - Dd::ONE / 31.0).abs().to_f64() < 1e-30);
    }

    #[test]
    fn adaptive_dd_handles_peaked_integrand() {
        // integral of 1/(1e-6 + x^2) over [0, 1]
        let e = 1e-3;
        let v = adaptive_dd(|x| Dd::ONE / (x * x + e * e), Dd::ZERO, Dd::ONE, 1e-28, 0.0, 10_000)
            .unwrap();
        let exact = (1.0f64 / e).atan() / e;
        assert!((v.to_f64() - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn gk_endpoint_singularity() {
        let (v, _) = adaptive_gk(|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-12, 1e-12, 100_000).unwrap();
        assert!((v - 2.0).abs() < 1e-9);
    }

    #[test]
    fn gk_semi_infinite() {
        let (v, _) = adaptive_gk_semi_infinite(|x| (-x).exp(), 0.0, 1e-13, 1e-13, 100_000).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gk_reports_failure() {
        let r = adaptive_gk(|x| (1.0 / x).sin(), 1e-9, 1.0, 1e-15, 0.0, 300);
        assert!(matches!(r, Err(QuadError::NoConvergence { .. })));
    }
}
