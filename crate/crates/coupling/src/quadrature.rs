//! Direct quadrature of the coupling integrals in double-double.
//!
//! Only `[0, 1]` is integrated (the integrand is even when `n + n'` is even).
//! Endpoint behaviour of the weights is removed by substitution:
//! `x = z sin t` for F and `x = z sinh u` for F-bar and G-bar.

use crate::kind::Kind;
use crate::{CouplingError, Result};
use steklov_numerics::quad::{adaptive_dd, GaussLegendreDd};
use steklov_numerics::Dd;

/// `P_n^m(x)` (Condon-Shortley phase) for `n = m..=n_top`, index `n - m`.
pub fn segment_column_dd(m: usize, n_top: usize, x: Dd) -> Vec<Dd> {
    let mut out = Vec::with_capacity(n_top + 1 - m);
    let s = (Dd::ONE - x * x).sqrt();
    let s = if s.hi.is_nan() { Dd::ZERO } else { s };
    let mut pmm = Dd::ONE;
    for k in 1..=m {
        pmm = -pmm * s * (2 * k - 1) as f64;
    }
    out.push(pmm);
    if n_top > m {
        out.push(x * pmm * (2 * m + 1) as f64);
    }
    for n in m + 1..n_top {
        let i = n - m;
        let next = (x * out[i] * (2 * n + 1) as f64 - out[i - 1] * (n + m) as f64) / (n - m + 1) as f64;
        out.push(next);
    }
    out
}

/// Integration variable range and the map `t -> (x, jacobian * weight)`.
struct Mapping {
    kind: Kind,
    z: Dd,
    upper: Dd,
}

impl Mapping {
    fn new(kind: Kind, z: f64) -> Self {
        let zd = Dd::new(z);
        let upper = match kind {
            Kind::F => (Dd::ONE / zd).asin(),
            Kind::GBar if z == 0.0 => Dd::ONE,
            Kind::FBar | Kind::GBar => (Dd::ONE / zd).asinh(),
        };
        Mapping { kind, z: zd, upper }
    }

    #[inline]
    fn point(&self, t: Dd) -> (Dd, Dd) {
        match self.kind {
            Kind::F => ((self.z * t.sin()).min_one(), Dd::ONE),
            Kind::GBar if self.z.hi == 0.0 => (t, t),
            Kind::FBar => ((self.z * t.sinh()).min_one(), Dd::ONE),
            Kind::GBar => {
                let c = t.cosh();
                ((self.z * t.sinh()).min_one(), self.z * self.z * c * c)
            }
        }
    }
}

trait MinOne {
    fn min_one(self) -> Self;
}

impl MinOne for Dd {
    fn min_one(self) -> Self {
        if self > Dd::ONE {
            Dd::ONE
        } else {
            self
        }
    }
}

/// Adaptive double-double quadrature of a single entry, rounded to f64.
///
/// `tol` is a relative tolerance on the integral.
pub fn quadrature_oracle(kind: Kind, z: f64, m: usize, n: usize, np: usize, tol: f64) -> Result<f64> {
    kind.check(z)?;
    if m > n || m > np || (n + np) % 2 == 1 {
        return Ok(0.0);
    }
    let map = Mapping::new(kind, z);
    let top = n.max(np);
    let v = adaptive_dd(
        |t| {
            let (x, w) = map.point(t);
            let col = segment_column_dd(m, top, x);
            w * col[n - m] * col[np - m]
        },
        Dd::ZERO,
        map.upper,
        tol,
        1e-300,
        20_000,
    )
    .map_err(|source| CouplingError::Oracle { m, n, np, source })?;
    Ok((v * 2.0).to_f64())
}

/// Every entry of slice `m` by composite Gauss quadrature, packed like
/// [`crate::fill_table`]. Panels are doubled until all entries settle.
pub fn quadrature_slice(kind: Kind, z: f64, m: usize, n_max: usize) -> Result<Vec<Dd>> {
    kind.check(z)?;
    let map = Mapping::new(kind, z);
    let rule = GaussLegendreDd::new(24);
    let size = n_max + 1 - m;
    let eval = |panels: usize| -> Vec<Dd> {
        let mut acc = vec![Dd::ZERO; size * size];
        let h = map.upper / panels as f64;
        for p in 0..panels {
            let lo = h * p as f64;
            let hi = lo + h;
            let half = (hi - lo).ldexp(-1);
            let mid = (hi + lo).ldexp(-1);
            for (&xi, &wi) in rule.nodes.iter().zip(&rule.weights) {
                let (x, w) = map.point(mid + half * xi);
                let col = segment_column_dd(m, n_max, x);
                let ww = w * wi * half * 2.0;
                for i in 0..size {
                    for j in (i..size).step_by(2) {
                        acc[i * size + j] += ww * col[i] * col[j];
                    }
                }
            }
        }
        for i in 0..size {
            for j in 0..i {
                acc[i * size + j] = acc[j * size + i];
            }
        }
        acc
    };
    let mut panels = 4;
    let mut prev = eval(panels);
    loop {
        panels *= 2;
        let next = eval(panels);
        let scale = next.iter().map(|v| v.abs().to_f64()).fold(0.0, f64::max);
        let worst = prev
            .iter()
            .zip(&next)
            .map(|(a, b)| (*a - *b).abs().to_f64() / b.abs().to_f64().max(1e-16 * scale).max(1e-300))
            .fold(0.0, f64::max);
        // Well below the gate; deep rows of nearly spherical tables stall near 1e-15.
        if worst < 1e-13 {
            return Ok(next);
        }
        if panels >= 2048 {
            return Err(CouplingError::Oracle {
                m,
                n: n_max,
                np: n_max,
                source: steklov_numerics::QuadError::NoConvergence {
                    estimate: scale,
                    error: worst,
                    evals: panels * 24,
                },
            });
        }
        prev = next;
    }
}
