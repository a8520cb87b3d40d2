use crate::geometry::SpheroidalPoint;
use crate::radial::radial_values;
use crate::spectrum::Spectrum;
use crate::{DtnError, Result};
use num_complex::Complex64;
use steklov_legendre::{harmonic_norm, segment_values};

/// Relative slack on the radial range accepted by [`Spectrum::eval_steklov`].
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// `Y_mn` at angular argument `x` (`cos(theta)` or `sin(theta)`), with
/// `Y_{-m,n} = (-1)^m conj(Y_mn)`.
pub fn spherical_harmonic(m: i64, n: usize, x: f64, phi: f64) -> Complex64 {
    let am = m.unsigned_abs() as usize;
    if am > n {
        return Complex64::new(0.0, 0.0);
    }
    let mut p = 0.0;
    segment_values(n, x, |nn, mm, v| {
        if nn == n && mm == am {
            p = v;
        }
    });
    let y = Complex64::from_polar(harmonic_norm(n, am) * p, am as f64 * phi);
    if m < 0 {
        sign(am) * y.conj()
    } else {
        y
    }
}

fn sign(m: usize) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl Spectrum {
    /// `P_{n'}^{|m|}(x) a_{|m| n'}` for `n' = |m|..=n_max`.
    fn angular(&self, am: usize, x: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.n_max + 1 - am];
        segment_values(self.n_max, x, |n, m, v| {
            if m == am {
                out[n - am] = v * harmonic_norm(n, am);
            }
        });
        out
    }

    fn combine(&self, m: i64, n: usize, theta: f64, phi: f64, radial: Option<&[f64]>) -> Result<Complex64> {
        let p = self.pair(m, n)?;
        let am = p.m;
        let ang = self.angular(am, self.geometry.angular_arg(theta));
        let mut s = 0.0;
        for (i, y) in ang.iter().enumerate() {
            let r = radial.map_or(1.0, |r| r[i]);
            s += p.v[i] * y * r;
        }
        let v = Complex64::from_polar(s / p.norm2.sqrt(), am as f64 * phi);
        Ok(if m < 0 { sign(am) * v.conj() } else { v })
    }

    /// Normalized eigenfunction `v_mn / ||v_mn||` on the boundary.
    pub fn eval_eigenfunction(&self, m: i64, n: usize, theta: f64, phi: f64) -> Result<Complex64> {
        self.combine(m, n, theta, phi, None)
    }

    /// Harmonic extension of the normalized eigenfunction into the domain.
    /// For the sphere `point.alpha` is the radius.
    pub fn eval_steklov(&self, m: i64, n: usize, point: SpheroidalPoint) -> Result<Complex64> {
        let (lo, hi) = self.geometry.alpha_range(&self.problem.region);
        let finite_hi = if hi.is_finite() { hi } else { lo };
        let slack = TRACE_TOLERANCE * finite_hi.max(1.0);
        if !(point.alpha >= lo - slack && point.alpha <= hi + slack) {
            return Err(DtnError::OutOfRange {
                alpha: point.alpha,
                lo,
                hi,
            });
        }
        let alpha = point.alpha.clamp(lo, hi);
        self.eval_steklov_unchecked(m, n, SpheroidalPoint { alpha, ..point })
    }

    /// As [`Spectrum::eval_steklov`] without the range check, so that
    /// finite-difference stencils may step across the boundary.
    pub fn eval_steklov_unchecked(&self, m: i64, n: usize, point: SpheroidalPoint) -> Result<Complex64> {
        let am = m.unsigned_abs() as usize;
        if am > self.n_max {
            return Err(DtnError::UnknownMode { m, n });
        }
        let rv = radial_values(&self.geometry, &self.problem.region, self.n_max, point.alpha)?;
        let mut ratio = Vec::with_capacity(self.n_max + 1 - am);
        for np in am..=self.n_max {
            let r = rv.value(np, am) / self.boundary.value(np, am);
            // The oblate ratio is real up to rounding: both factors carry the same phase.
            ratio.push(r.re);
        }
        self.combine(m, n, point.theta, point.phi, Some(&ratio))
    }
}
