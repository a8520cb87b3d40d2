use crate::{AppError, Result};
use std::f64::consts::PI;
use steklov_dtn::{geometry, ProblemSpec, Shape, Spectrum};

/// Harmonic capacity `C` (the total flux `J = D C0 C` onto a perfect sink).
pub fn capacity(spec: &ProblemSpec) -> Result<f64> {
    if !spec.is_exterior() {
        return Err(AppError::NotApplicable("capacity"));
    }
    let g = geometry(spec)?;
    let (b, a_e) = (g.b, g.a_e);
    Ok(match g.shape {
        Shape::Sphere => 4.0 * PI * b,
        Shape::Prolate => 8.0 * PI * a_e / ((b + a_e) / (b - a_e)).ln(),
        Shape::Oblate => 4.0 * PI * a_e / (g.a / b).acos(),
    })
}

/// Capacity through the spectral coefficient, `4 pi w c00`.
pub fn capacity_from_spectrum(s: &Spectrum) -> Result<f64> {
    if !s.problem.is_exterior() {
        return Err(AppError::NotApplicable("capacity"));
    }
    Ok(4.0 * PI * s.geometry.norm_weight() * s.coefficients.get(0, 0))
}

/// Area of the boundary; both faces for the disk.
pub fn surface_area(spec: &ProblemSpec) -> Result<f64> {
    Ok(geometry(spec)?.surface_area())
}
