use crate::report::OracleReport;
use crate::{OracleError, Result};
use num_complex::Complex64;
use num_traits::Zero;
use std::f64::consts::PI;
use std::ops::{Add, Mul};
use steklov_coupling::{build_recurrence, quadrature_oracle, Kind, GATE_TOLERANCE};
use steklov_dtn::{geometry, Geometry, ProblemSpec, Region, Spectrum, SpheroidalPoint};
use steklov_numerics::GaussLegendre;

/// Smallest accepted grid resolution.
pub const MIN_RESOLUTION: usize = 4;

/// Gauss-Legendre nodes in `theta` times equispaced `phi`, with weights
/// carrying the surface element `h_theta h_phi`.
fn surface_grid(g: &Geometry, n_theta: usize, n_phi: usize) -> Result<Vec<(f64, f64, f64)>> {
    if n_theta.min(n_phi) < MIN_RESOLUTION {
        return Err(OracleError::DegenerateGrid {
            resolution: n_theta.min(n_phi),
        });
    }
    let (lo, hi) = g.theta_range();
    let rule = GaussLegendre::new(n_theta);
    let dphi = 2.0 * PI / n_phi as f64;
    let mut points = Vec::with_capacity(n_theta * n_phi);
    for (theta, w) in rule.mapped(lo, hi) {
        let dw = w * dphi * g.area_element(theta);
        for j in 0..n_phi {
            points.push((theta, j as f64 * dphi, dw));
        }
    }
    Ok(points)
}

/// `int f dS` over the Steklov boundary of `spec` on a `resolution x
/// resolution` grid.
pub fn surface_quadrature<T, F>(mut f: F, spec: &ProblemSpec, resolution: usize) -> Result<T>
where
    T: Copy + Zero + Add<Output = T> + Mul<f64, Output = T>,
    F: FnMut(f64, f64) -> T,
{
    let g = geometry(spec)?;
    let grid = surface_grid(&g, resolution, resolution)?;
    Ok(grid.iter().fold(T::zero(), |acc, &(t, p, w)| acc + f(t, p) * w))
}

/// `max |G - I|` for the Gram matrix of the `count` lowest normalized
/// eigenfunctions.
pub fn gram_defect(s: &Spectrum, count: usize, n_theta: usize, n_phi: usize) -> Result<f64> {
    if count > s.len() {
        return Err(OracleError::Domain(format!("{count} modes requested, spectrum has {}", s.len())));
    }
    let grid = surface_grid(&s.geometry, n_theta, n_phi)?;
    let mut values = Vec::with_capacity(count);
    for k in 0..count {
        let i = s.mode(k).expect("k < len");
        let v = grid
            .iter()
            .map(|&(t, p, _)| s.eval_eigenfunction(i.m, i.n, t, p))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        values.push(v);
    }
    let mut worst = 0.0f64;
    for a in 0..count {
        for b in a..count {
            let g: Complex64 = grid
                .iter()
                .zip(values[a].iter().zip(&values[b]))
                .map(|(&(_, _, w), (x, y))| x * y.conj() * w)
                .sum();
            let want = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((g - want).norm());
        }
    }
    Ok(worst)
}

/// Max over a `(theta, phi)` grid of `|d_n V_k - mu_k v_k|`, relative to
/// `max(|mu_k|, 1/b) max |v_k|`. The normal derivative is a fourth-order
/// central difference in `alpha` with step `h`, divided by `h_alpha`.
pub fn steklov_residual(s: &Spectrum, k: usize, resolution: usize, h: f64) -> Result<f64> {
    let i = s
        .mode(k)
        .ok_or_else(|| OracleError::Domain(format!("mode {k} is beyond the {} computed", s.len())))?;
    if resolution < MIN_RESOLUTION {
        return Err(OracleError::DegenerateGrid { resolution });
    }
    let g = &s.geometry;
    let a0 = g.boundary_alpha();
    if !(h > 0.0 && 2.0 * h < a0.max(1e-300)) {
        return Err(OracleError::Domain(format!("finite-difference step {h} is not small against alpha0 = {a0}")));
    }
    let mu = s.mu(i.m, i.n)?;
    let sign = if matches!(s.problem.region, Region::Interior) { 1.0 } else { -1.0 };
    let (lo, hi) = g.theta_range();
    let rule = GaussLegendre::new(resolution);
    let dphi = 2.0 * PI / resolution as f64;
    let (mut worst, mut vmax) = (0.0f64, 0.0f64);
    for (theta, _) in rule.mapped(lo, hi) {
        for j in 0..resolution {
            let phi = j as f64 * dphi;
            let at = |a: f64| s.eval_steklov_unchecked(i.m, i.n, SpheroidalPoint::new(a, theta, phi));
            let d = (at(a0 - 2.0 * h)? - at(a0 + 2.0 * h)? + 8.0 * (at(a0 + h)? - at(a0 - h)?)) / (12.0 * h);
            let v = at(a0)?;
            let dn = sign * d / g.h_alpha(a0, theta);
            worst = worst.max((dn - mu * v).norm());
            vmax = vmax.max(v.norm());
        }
    }
    Ok(worst / (mu.abs().max(1.0 / g.b) * vmax))
}

/// Largest relative deviation of the recurrence table from adaptive
/// quadrature over every nonzero entry of order `<= n_max`, gated at the
/// coupling tolerance.
pub fn coupling_gate(kind: Kind, z: f64, n_max: usize) -> Result<OracleReport> {
    let t = build_recurrence(kind, z, n_max)?;
    let mut worst = 0.0f64;
    let mut count = 0u64;
    for m in 0..=n_max {
        for n in m..=n_max {
            for np in (n..=n_max).step_by(2) {
                let q = quadrature_oracle(kind, z, m, n, np, 1e-20)?;
                worst = worst.max((t.get(m, n, np) - q).abs() / q.abs().max(1e-14));
                count += 1;
            }
        }
    }
    Ok(OracleReport::absolute(
        format!("coupling {kind:?} z={z}: max relative deviation"),
        0.0,
        worst,
        GATE_TOLERANCE,
        count,
    ))
}
