use crate::{AppError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use steklov_dtn::{geometry, Geometry, ProblemSpec, Shape};
use steklov_legendre::{eval_imag_axis, harmonic_norm, segment_values};
use steklov_numerics::GaussLegendre;

/// Potential of a disk of radius `b` held at `u = 1` in a reflecting plane
/// (equivalently, the free disk), at cylindrical `(r, z)`.
pub fn disk_weber_potential(r: f64, z: f64, b: f64) -> f64 {
    let rp = (r + b).hypot(z);
    let rm = (r - b).hypot(z);
    let s = rp + rm;
    (1.0 - 8.0 * b * b / (s * s)).clamp(-1.0, 1.0).acos() / PI
}

/// `omega(r) = 1 / (b sqrt(b^2 - r^2))`, normalized against `r dr`.
pub fn disk_harmonic_measure(r: f64, b: f64) -> Result<f64> {
    if !(r >= 0.0 && r < b) {
        return Err(AppError::Domain(format!("harmonic measure needs 0 <= r < b (r = {r}, b = {b})")));
    }
    Ok(1.0 / (b * ((b - r) * (b + r)).sqrt()))
}

/// Symmetry of the data, and with it the condition on the rest of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfspaceParity {
    /// Odd data; `u = 0` on the plane outside the disk (channels with odd `m + n`).
    DirichletType,
    /// Even data; `du/dz = 0` on the plane outside the disk (even `m + n`).
    NeumannType,
}

impl HalfspaceParity {
    fn sign(self) -> f64 {
        match self {
            HalfspaceParity::DirichletType => -1.0,
            HalfspaceParity::NeumannType => 1.0,
        }
    }

    fn keeps(self, m: usize, n: usize) -> bool {
        ((m + n) % 2 == 0) == (self == HalfspaceParity::NeumannType)
    }
}

/// Series `u = sum A_mn Q_n^|m|(i sinh alpha) Y_mn(theta, phi)` around a disk.
#[derive(Debug, Clone)]
pub struct DiskSolution {
    pub b: f64,
    pub n_terms: usize,
    pub parity: HalfspaceParity,
    geometry: Geometry,
    /// `(m, n, A_mn)` for the retained channels.
    pub coefficients: Vec<(i64, usize, Complex64)>,
}

impl DiskSolution {
    pub fn coefficient(&self, m: i64, n: usize) -> Complex64 {
        self.coefficients
            .iter()
            .find(|c| c.0 == m && c.1 == n)
            .map_or(Complex64::new(0.0, 0.0), |c| c.2)
    }

    /// `u` at cylindrical `(r, z, phi)`.
    pub fn eval(&self, r: f64, z: f64, phi: f64) -> Result<f64> {
        let p = self.geometry.from_cartesian([r * phi.cos(), r * phi.sin(), z]);
        let (_, q) = eval_imag_axis(self.n_terms, p.alpha.sinh())?;
        let y = normalized_legendre(self.n_terms, p.theta.sin());
        let mut u = Complex64::new(0.0, 0.0);
        for &(m, n, a) in &self.coefficients {
            let am = m.unsigned_abs() as usize;
            let mut e = Complex64::from_polar(y[n][am], am as f64 * p.phi);
            if m < 0 {
                e = harmonic_sign(am) * e.conj();
            }
            u += a * q.value(n, am) * e;
        }
        Ok(u.re)
    }
}

/// `a_nm P_n^m(x)` indexed `[n][m]`.
fn normalized_legendre(n_max: usize, x: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = (0..=n_max).map(|n| vec![0.0; n + 1]).collect();
    segment_values(n_max, x, |n, m, v| out[n][m] = v * harmonic_norm(n, m));
    out
}

fn harmonic_sign(m: usize) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Expand data `f(theta, phi)` given on the two faces of a disk of radius
/// `b` (`r = b cos(theta)`, upper face `theta > 0`) and build the exterior
/// harmonic function that matches it.
pub fn disk_halfspace_solve<F: Fn(f64, f64) -> f64>(
    data: F,
    parity: HalfspaceParity,
    n_terms: usize,
    b: f64,
) -> Result<DiskSolution> {
    let geometry = geometry(&ProblemSpec::exterior(Shape::Oblate, 0.0, b))?;
    let n_theta = 2 * n_terms + 64;
    let n_phi = 2 * n_terms + 8;
    let rule = GaussLegendre::new(n_theta);
    let dphi = 2.0 * PI / n_phi as f64;
    let twiddle: Vec<Complex64> = (0..n_phi).map(|j| Complex64::from_polar(1.0, -(j as f64) * dphi)).collect();
    // Per node: (theta, weight, Fourier row g_m for m = 0..=n_terms).
    let mut rows: Vec<(f64, Vec<Complex64>)> = Vec::with_capacity(2 * n_theta);
    let (mut defect, mut scale) = (0.0f64, 0.0f64);
    let mut up = vec![0.0; n_phi];
    let mut down = vec![0.0; n_phi];
    for (t, w) in rule.mapped(0.0, PI / 2.0) {
        for j in 0..n_phi {
            let phi = j as f64 * dphi;
            up[j] = data(t, phi);
            down[j] = data(-t, phi);
            defect = defect.max((down[j] - parity.sign() * up[j]).abs());
            scale = scale.max(up[j].abs()).max(down[j].abs());
        }
        let weight = w * t.cos() * dphi;
        for (theta, vals) in [(t, &up), (-t, &down)] {
            let g = (0..=n_terms)
                .map(|m| {
                    let mut acc = Complex64::new(0.0, 0.0);
                    let mut k = 0;
                    for &v in vals.iter() {
                        acc += v * twiddle[k];
                        k = (k + m) % n_phi;
                    }
                    acc * weight
                })
                .collect();
            rows.push((theta, g));
        }
    }
    if defect > 1e-10 * scale.max(f64::MIN_POSITIVE) {
        return Err(AppError::ParityMismatch {
            expected: match parity {
                HalfspaceParity::DirichletType => "odd",
                HalfspaceParity::NeumannType => "even",
            },
            defect: defect / scale,
        });
    }
    let mut proj = vec![vec![Complex64::new(0.0, 0.0); n_terms + 1]; n_terms + 1];
    for (theta, g) in &rows {
        let y = normalized_legendre(n_terms, theta.sin());
        for n in 0..=n_terms {
            for am in 0..=n {
                if parity.keeps(am, n) {
                    proj[n][am] += y[n][am] * g[am];
                }
            }
        }
    }
    let (_, q0) = eval_imag_axis(n_terms, 0.0)?;
    let mut coefficients = Vec::new();
    for n in 0..=n_terms {
        for am in 0..=n {
            if !parity.keeps(am, n) {
                continue;
            }
            let q = q0.value(n, am);
            let a = proj[n][am];
            coefficients.push((am as i64, n, a / q));
            if am > 0 {
                // conj(Y_{-m,n}) = (-1)^m Y_mn, and the data are real.
                coefficients.push((-(am as i64), n, harmonic_sign(am) * a.conj() / q));
            }
        }
    }
    Ok(DiskSolution {
        b,
        n_terms,
        parity,
        geometry,
        coefficients,
    })
}
