//! Associated Legendre functions of integer degree and order.
//!
//! Three argument regimes are supported:
//!
//! * the segment `x` in `[-1, 1]` (first kind, Condon-Shortley phase),
//! * the real ray `z > 1` (both kinds, no phase factor),
//! * the imaginary axis `z = i s`, `s >= 0` (both kinds, complex values).
//!
//! Off the segment both kinds use `(z^2 - 1)^{m/2}` with the principal square
//! root, so `sqrt(z^2 - 1) = i sqrt(1 + s^2)` on the imaginary axis. Only
//! ratios of these functions enter the spectral solver, so any consistent
//! branch works.

use num_complex::Complex64;
use thiserror::Error;

mod table;
pub use table::{LegendreTable, TableKind};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LegendreError {
    #[error("argument {arg} outside the domain of {op}: {hint}")]
    Domain { op: &'static str, arg: f64, hint: &'static str },
    #[error("argument z = {0} too close to 1: (z^2 - 1)^(-1/2) is not representable")]
    Singular(f64),
    #[error("second-kind recurrence lost accuracy at n_max = {n_max} (discrepancy {discrepancy:e})")]
    Precision { n_max: usize, discrepancy: f64 },
}

pub type Result<T> = std::result::Result<T, LegendreError>;

/// `P_n^m(x)` on the segment for all `0 <= m <= n <= n_max`.
///
/// Derivatives are taken with respect to `x`. At `|x| = 1` they are filled in
/// for `m = 0` only; entries with `m >= 1` are NaN there.
pub fn eval_segment(n_max: usize, x: f64) -> Result<LegendreTable<f64>> {
    if !(x.abs() <= 1.0) {
        return Err(LegendreError::Domain {
            op: "eval_segment",
            arg: x,
            hint: "use eval_exterior_real for |x| > 1",
        });
    }
    let mut t = LegendreTable::zeros(TableKind::PSegment, Complex64::new(x, 0.0), n_max);
    segment_values(n_max, x, |n, m, v| t.set(n, m, v));
    let s2 = (1.0 - x) * (1.0 + x);
    for n in 0..=n_max {
        for m in 0..=n {
            let d = if s2 > 0.0 {
                let prev = if n > m { t.value(n - 1, m) } else { 0.0 };
                (n as f64 * x * t.value(n, m) - (n + m) as f64 * prev) / (x * x - 1.0)
            } else if m == 0 {
                let e = 0.5 * (n * (n + 1)) as f64;
                if x > 0.0 || n % 2 == 1 {
                    e
                } else {
                    -e
                }
            } else {
                f64::NAN
            };
            t.set_deriv(n, m, d);
        }
    }
    Ok(t)
}

/// Visit `P_n^m(x)` (Condon-Shortley phase) for all `m <= n <= n_max`
/// without allocating a table.
pub fn segment_values<F: FnMut(usize, usize, f64)>(n_max: usize, x: f64, mut visit: F) {
    let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let mut pmm = 1.0;
    for m in 0..=n_max {
        if m > 0 {
            pmm *= -((2 * m - 1) as f64) * s;
        }
        visit(m, m, pmm);
        if m == n_max {
            break;
        }
        let mut p0 = pmm;
        let mut p1 = (2 * m + 1) as f64 * x * pmm;
        visit(m + 1, m, p1);
        for n in m + 1..n_max {
            let p2 = ((2 * n + 1) as f64 * x * p1 - (n + m) as f64 * p0) / (n - m + 1) as f64;
            visit(n + 1, m, p2);
            p0 = p1;
            p1 = p2;
        }
    }
}

/// `P_n^m(z)` and `Q_n^m(z)` for real `z > 1`.
pub fn eval_exterior_real(n_max: usize, z: f64) -> Result<(LegendreTable<f64>, LegendreTable<f64>)> {
    if !(z > 1.0) || !z.is_finite() {
        return Err(LegendreError::Domain {
            op: "eval_exterior_real",
            arg: z,
            hint: "requires z > 1",
        });
    }
    let w2 = (z - 1.0) * (z + 1.0);
    let w = w2.sqrt();
    if w == 0.0 || !(1.0 / w).is_finite() || w2 < 1e-300 {
        return Err(LegendreError::Singular(z));
    }
    let zc = Complex64::new(z, 0.0);
    let q0 = Complex64::new((1.0 / z).atanh(), 0.0);
    let (p, q) = engine(n_max, zc, Complex64::new(w, 0.0), q0)?;
    Ok((p.map_real(TableKind::PExterior), q.map_real(TableKind::QExterior)))
}

/// `P_n^m(i s)` and `Q_n^m(i s)` for `s >= 0`.
pub fn eval_imag_axis(
    n_max: usize,
    s: f64,
) -> Result<(LegendreTable<Complex64>, LegendreTable<Complex64>)> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(LegendreError::Domain {
            op: "eval_imag_axis",
            arg: s,
            hint: "requires s >= 0",
        });
    }
    let z = Complex64::new(0.0, s);
    let w = Complex64::new(0.0, (1.0 + s * s).sqrt());
    // Q_0(i s) = -i arccot(s)
    let q0 = Complex64::new(0.0, -(1.0f64).atan2(s));
    let (mut p, mut q) = engine(n_max, z, w, q0)?;
    p.kind = TableKind::PImag;
    q.kind = TableKind::QImag;
    Ok((p, q))
}

fn engine(
    n_max: usize,
    z: Complex64,
    w: Complex64,
    q0: Complex64,
) -> Result<(LegendreTable<Complex64>, LegendreTable<Complex64>)> {
    let mut p = LegendreTable::zeros(TableKind::PExterior, z, n_max);
    let mut q = LegendreTable::zeros(TableKind::QExterior, z, n_max);
    let w2 = w * w;

    // First kind: diagonal start, upward in n.
    let mut pmm = Complex64::new(1.0, 0.0);
    for m in 0..=n_max {
        if m > 0 {
            pmm *= (2 * m - 1) as f64 * w;
        }
        p.set(m, m, pmm);
        if m < n_max {
            let mut p0 = pmm;
            let mut p1 = (2 * m + 1) as f64 * z * pmm;
            p.set(m + 1, m, p1);
            for n in m + 1..n_max {
                let p2 = ((2 * n + 1) as f64 * z * p1 - (n + m) as f64 * p0) / (n - m + 1) as f64;
                p.set(n + 1, m, p2);
                p0 = p1;
                p1 = p2;
            }
        }
    }

    // Second kind: columns m = 0 and m = 1, then upward in m.
    let cols = second_kind_columns(n_max, z, w, q0)?;
    for n in 0..=n_max {
        q.set(n, 0, cols[0][n]);
        q.set(n, 1, cols[1][n]);
        for m in 1..=n {
            let next = ((n + m) * (n + 1 - m)) as f64 * q.value(n, m - 1)
                - 2.0 * m as f64 * z * q.value(n, m) / w;
            q.set(n, m + 1, next);
        }
    }

    for n in 0..=n_max {
        for m in 0..=n {
            let dp = (w * p.value(n, m + 1) + m as f64 * z * p.value(n, m)) / w2;
            p.set_deriv(n, m, dp);
            let dq = (w * q.value(n, m + 1) + m as f64 * z * q.value(n, m)) / w2;
            q.set_deriv(n, m, dq);
        }
    }
    p.w = w;
    q.w = w;
    Ok((p, q))
}

/// Magnitude of the dominant/minimal solution ratio per unit degree.
fn growth_rate(z: Complex64, w: Complex64) -> f64 {
    let r = (z + w).norm();
    r.max(1.0 / r)
}

fn second_kind_columns(
    n_max: usize,
    z: Complex64,
    w: Complex64,
    q0: Complex64,
) -> Result<[Vec<Complex64>; 2]> {
    let rho = growth_rate(z, w);
    let norms = [q0, -1.0 / w];
    let upward = rho.powf(2.0 * n_max as f64) < 1e4 || n_max < 2;
    if upward {
        let q1 = z * q0 - 1.0;
        let q11 = w * q0 - z / w;
        let col0 = upward_column(n_max, 0, z, q0, q1);
        let col1 = upward_column(n_max, 1, z, norms[1], q11);
        return Ok([col0, col1]);
    }
    let extra = (17.0 * std::f64::consts::LN_10 / (2.0 * rho.ln())).ceil() as usize + 10;
    let mut out: [Vec<Complex64>; 2] = [Vec::new(), Vec::new()];
    for m in 0..2 {
        let a = miller_column(n_max, m, z, norms[m], n_max + extra);
        let b = miller_column(n_max, m, z, norms[m], n_max + extra + 12);
        let disc = a
            .iter()
            .zip(&b)
            .map(|(x, y)| (x - y).norm() / y.norm().max(1e-300))
            .fold(0.0, f64::max);
        if disc > 1e-12 {
            return Err(LegendreError::Precision { n_max, discrepancy: disc });
        }
        out[m] = b;
    }
    Ok(out)
}

fn upward_column(n_max: usize, m: usize, z: Complex64, first: Complex64, second: Complex64) -> Vec<Complex64> {
    let mut col = vec![first];
    if n_max >= 1 {
        col.push(second);
    }
    for n in 1..n_max {
        let next = ((2 * n + 1) as f64 * z * col[n] - (n + m) as f64 * col[n - 1]) / (n + 1 - m) as f64;
        col.push(next);
    }
    col
}

/// Minimal solution of the degree recurrence by the backward ratio
/// recurrence `r_n = Q_n/Q_{n-1} = (n+m) / ((2n+1) z - (n+1-m) r_{n+1})`,
/// started from `r = 0` at degree `start` and scaled by `Q_0 = norm`.
fn miller_column(n_max: usize, m: usize, z: Complex64, norm: Complex64, start: usize) -> Vec<Complex64> {
    let mut ratios = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut r = Complex64::new(0.0, 0.0);
    for n in (1..=start).rev() {
        r = (n + m) as f64 / ((2 * n + 1) as f64 * z - (n + 1 - m) as f64 * r);
        if n <= n_max {
            ratios[n] = r;
        }
    }
    let mut vals = Vec::with_capacity(n_max + 1);
    vals.push(norm);
    for n in 1..=n_max {
        let prev = vals[n - 1];
        vals.push(prev * ratios[n]);
    }
    vals
}

/// `(2k - 1)!!`.
pub fn double_factorial_odd(k: usize) -> f64 {
    (1..=k).map(|i| (2 * i - 1) as f64).product()
}

/// Normalization `a_mn = sqrt((2n+1)/(4 pi) (n-m)!/(n+m)!)` of the
/// spherical harmonic `Y_mn = a_mn P_n^m(cos theta) e^{i m phi}`.
pub fn harmonic_norm(n: usize, m: usize) -> f64 {
    debug_assert!(m <= n);
    let mut ratio = 1.0f64;
    for k in (n - m + 1)..=(n + m) {
        ratio /= k as f64;
    }
    ((2 * n + 1) as f64 / (4.0 * std::f64::consts::PI) * ratio).sqrt()
}
