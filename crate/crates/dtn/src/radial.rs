//! Radial factors of separated harmonic functions and the coefficients
//! `c_mn` they induce on the Steklov boundary.
//!
//! Every region uses `c = s (dR/dalpha) / (a_E R)` at the boundary, where
//! `s = -1` when the outward normal points towards smaller `alpha`
//! (exterior, shell) and `s = +1` for the interior.

use crate::geometry::{Geometry, OuterBc, Region, Shape};
use crate::{DtnError, Result};
use num_complex::Complex64;
use steklov_legendre::{eval_exterior_real, eval_imag_axis, LegendreTable};

/// Smallest `alpha` handed to the Legendre tables; the focal segment itself
/// is a coordinate singularity.
const ALPHA_FLOOR: f64 = 1e-7;

/// Relative imaginary part tolerated in an oblate coefficient.
pub const IMAG_RESIDUE_TOLERANCE: f64 = 1e-12;

#[inline]
fn idx(n: usize, m: usize) -> usize {
    n * (n + 1) / 2 + m
}

/// `R_n^m(alpha)` and `dR_n^m/dalpha` for `m <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct RadialValues {
    pub n_max: usize,
    pub alpha: f64,
    values: Vec<Complex64>,
    derivs: Vec<Complex64>,
}

impl RadialValues {
    pub fn value(&self, n: usize, m: usize) -> Complex64 {
        self.values[idx(n, m)]
    }

    pub fn deriv(&self, n: usize, m: usize) -> Complex64 {
        self.derivs[idx(n, m)]
    }
}

struct Tables {
    p: Vec<Complex64>,
    dp: Vec<Complex64>,
    q: Vec<Complex64>,
    dq: Vec<Complex64>,
    /// `d(argument)/dalpha`.
    jac: Complex64,
}

fn collect<T: Copy + Default + Into<Complex64>>(t: &LegendreTable<T>, n_max: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut v = Vec::with_capacity(idx(n_max + 1, 0));
    let mut d = Vec::with_capacity(idx(n_max + 1, 0));
    for n in 0..=n_max {
        for m in 0..=n {
            v.push(t.value(n, m).into());
            d.push(t.deriv(n, m).into());
        }
    }
    (v, d)
}

fn tables(shape: Shape, n_max: usize, alpha: f64) -> Result<Tables> {
    match shape {
        Shape::Prolate => {
            let alpha = alpha.max(ALPHA_FLOOR);
            let (p, q) = eval_exterior_real(n_max, alpha.cosh())?;
            let (p, dp) = collect(&p, n_max);
            let (q, dq) = collect(&q, n_max);
            Ok(Tables {
                p,
                dp,
                q,
                dq,
                jac: Complex64::new(alpha.sinh(), 0.0),
            })
        }
        Shape::Oblate => {
            let (p, q) = eval_imag_axis(n_max, alpha.sinh())?;
            let (p, dp) = collect(&p, n_max);
            let (q, dq) = collect(&q, n_max);
            Ok(Tables {
                p,
                dp,
                q,
                dq,
                jac: Complex64::new(0.0, alpha.cosh()),
            })
        }
        Shape::Sphere => unreachable!("sphere radial factors are closed-form"),
    }
}

/// Radial factors at `alpha` for the given region. For the sphere `alpha`
/// is the radius and the factors are `r^n` / `r^-(n+1)`.
pub fn radial_values(geom: &Geometry, region: &Region, n_max: usize, alpha: f64) -> Result<RadialValues> {
    let len = idx(n_max + 1, 0);
    let mut values = Vec::with_capacity(len);
    let mut derivs = Vec::with_capacity(len);
    if geom.shape == Shape::Sphere {
        let r = alpha / geom.b;
        for n in 0..=n_max {
            let nf = n as f64;
            let (v, d) = match region {
                Region::Interior => (r.powi(n as i32), if n == 0 { 0.0 } else { nf * r.powi(n as i32 - 1) / geom.b }),
                _ => (r.powi(-(n as i32) - 1), -(nf + 1.0) * r.powi(-(n as i32) - 2) / geom.b),
            };
            for _ in 0..=n {
                values.push(Complex64::new(v, 0.0));
                derivs.push(Complex64::new(d, 0.0));
            }
        }
        return Ok(RadialValues {
            n_max,
            alpha,
            values,
            derivs,
        });
    }
    let t = tables(geom.shape, n_max, alpha)?;
    match region {
        Region::Exterior => {
            values = t.q;
            derivs = t.dq.iter().map(|d| d * t.jac).collect();
        }
        Region::Interior => {
            values = t.p;
            derivs = t.dp.iter().map(|d| d * t.jac).collect();
        }
        Region::Shell { outer_bc, .. } => {
            let outer = geom.outer.expect("shell geometry carries its outer surface");
            let o = tables(geom.shape, n_max, outer.alpha)?;
            for i in 0..len {
                // R = A P - B Q with (A, B) chosen so that R or R' vanishes outside.
                let (wp, wq) = match outer_bc {
                    OuterBc::Dirichlet => (o.q[i], o.p[i]),
                    OuterBc::Neumann => (o.dq[i], o.dp[i]),
                };
                values.push(wq * t.q[i] - wp * t.p[i]);
                derivs.push((wq * t.dq[i] - wp * t.dp[i]) * t.jac);
            }
        }
    }
    Ok(RadialValues {
        n_max,
        alpha,
        values,
        derivs,
    })
}

/// Coefficients `c_mn`, indexed `[m][n - m]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients {
    pub n_max: usize,
    pub rows: Vec<Vec<f64>>,
}

impl Coefficients {
    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.rows[m][n - m]
    }

    pub fn row(&self, m: usize) -> &[f64] {
        &self.rows[m]
    }
}

/// Coefficients from radial values at the Steklov boundary.
pub fn coefficients_from(geom: &Geometry, region: &Region, boundary: &RadialValues) -> Result<Coefficients> {
    let n_max = boundary.n_max;
    let sign = if matches!(region, Region::Interior) { 1.0 } else { -1.0 };
    let scale = if geom.shape == Shape::Sphere { 1.0 } else { geom.a_e };
    let zero_mode = match region {
        Region::Interior => true,
        Region::Shell { outer_bc, .. } => *outer_bc == OuterBc::Neumann,
        Region::Exterior => false,
    };
    let mut rows = vec![Vec::new(); n_max + 1];
    for n in 0..=n_max {
        for m in 0..=n {
            let r = boundary.value(n, m);
            let dr = boundary.deriv(n, m);
            if !(r.norm() > 1e-300) || !r.is_finite() || !dr.is_finite() {
                return Err(DtnError::IllConditioned {
                    m,
                    n,
                    detail: format!("radial factor {r} at the boundary"),
                });
            }
            let c = sign * dr / (scale * r);
            let residue = c.im.abs() / c.norm().max(1.0 / geom.b);
            if residue > IMAG_RESIDUE_TOLERANCE {
                return Err(DtnError::ImaginaryResidue { m, n, residue });
            }
            let c = if zero_mode && n == 0 { 0.0 } else { c.re };
            if !(c >= 0.0) {
                return Err(DtnError::IllConditioned {
                    m,
                    n,
                    detail: format!("coefficient {c} is not positive"),
                });
            }
            rows[m].push(c);
        }
    }
    Ok(Coefficients { n_max, rows })
}

pub fn coefficients(geom: &Geometry, region: &Region, n_max: usize) -> Result<Coefficients> {
    coefficients_from(geom, region, &radial_values(geom, region, n_max, geom.boundary_alpha())?)
}
