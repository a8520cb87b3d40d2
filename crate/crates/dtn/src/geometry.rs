use crate::{DtnError, Result};
use std::f64::consts::PI;

/// Ratio `a/b` above which the spheroidal solver refuses to run.
pub const NEAR_SPHERE_RATIO: f64 = 0.99;
/// Relative tolerance on `b^2 - a^2 = B^2 - A^2` for shells.
pub const CONFOCAL_TOLERANCE: f64 = 1e-12;
/// Oblate problems with `sinh(alpha_0)` below this use the Neumann-to-Dirichlet route.
pub const DISK_THRESHOLD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Prolate,
    Oblate,
    /// Analytic branch; requires `a == b`.
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OuterBc {
    Dirichlet,
    Neumann,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Exterior,
    Interior,
    /// Confocal shell; the Steklov condition sits on the inner surface
    /// `(a, b)` and `outer_bc` on the outer surface `(outer_a, outer_b)`.
    Shell {
        outer_a: f64,
        outer_b: f64,
        outer_bc: OuterBc,
    },
}

/// Shape, region and semi-axes (`a` minor, `b` major).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec {
    pub shape: Shape,
    pub region: Region,
    pub a: f64,
    pub b: f64,
}

impl ProblemSpec {
    pub fn new(shape: Shape, region: Region, a: f64, b: f64) -> Self {
        ProblemSpec { shape, region, a, b }
    }

    pub fn exterior(shape: Shape, a: f64, b: f64) -> Self {
        Self::new(shape, Region::Exterior, a, b)
    }

    pub fn interior(shape: Shape, a: f64, b: f64) -> Self {
        Self::new(shape, Region::Interior, a, b)
    }

    pub fn shell(shape: Shape, a: f64, b: f64, outer_a: f64, outer_b: f64, outer_bc: OuterBc) -> Self {
        Self::new(
            shape,
            Region::Shell {
                outer_a,
                outer_b,
                outer_bc,
            },
            a,
            b,
        )
    }

    pub fn sphere(b: f64, region: Region) -> Self {
        Self::new(Shape::Sphere, region, b, b)
    }

    pub fn is_exterior(&self) -> bool {
        matches!(self.region, Region::Exterior)
    }

    /// Whether the constant function lies in the kernel of the operator.
    pub fn has_zero_mode(&self) -> bool {
        match self.region {
            Region::Exterior => false,
            Region::Interior => true,
            Region::Shell { outer_bc, .. } => outer_bc == OuterBc::Neumann,
        }
    }
}

/// A point in spheroidal coordinates. For the sphere `alpha` is the radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpheroidalPoint {
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SpheroidalPoint {
    pub fn new(alpha: f64, theta: f64, phi: f64) -> Self {
        SpheroidalPoint { alpha, theta, phi }
    }
}

/// Outer surface of a shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterSurface {
    pub alpha: f64,
    pub bc: OuterBc,
}

/// Derived geometric quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub shape: Shape,
    pub a: f64,
    pub b: f64,
    /// Half the focal distance, `sqrt(b^2 - a^2)`.
    pub a_e: f64,
    /// `atanh(a/b)`; the boundary is `alpha = alpha0`.
    pub alpha0: f64,
    pub outer: Option<OuterSurface>,
}

pub fn geometry(spec: &ProblemSpec) -> Result<Geometry> {
    let ProblemSpec { shape, region, a, b } = *spec;
    if !(b > 0.0) || !b.is_finite() || !(a >= 0.0) || !a.is_finite() {
        return Err(DtnError::Geometry(format!("semi-axes must be finite with b > 0, a >= 0 (a = {a}, b = {b})")));
    }
    if shape == Shape::Sphere {
        if a != b {
            return Err(DtnError::Geometry(format!("sphere requires a == b (a = {a}, b = {b})")));
        }
        if matches!(region, Region::Shell { .. }) {
            return Err(DtnError::Unsupported("shells on the sphere branch"));
        }
        return Ok(Geometry {
            shape,
            a,
            b,
            a_e: 0.0,
            alpha0: f64::INFINITY,
            outer: None,
        });
    }
    if a >= b {
        return Err(DtnError::Geometry(format!("spheroid requires a < b (a = {a}, b = {b})")));
    }
    if a / b > NEAR_SPHERE_RATIO {
        return Err(DtnError::NearSphere { ratio: a / b });
    }
    if shape == Shape::Prolate && a == 0.0 {
        return Err(DtnError::Geometry("a prolate spheroid needs a > 0 (a = 0 is a needle)".into()));
    }
    let a_e = ((b - a) * (b + a)).sqrt();
    let alpha0 = (a / b).atanh();
    let outer = match region {
        Region::Shell {
            outer_a,
            outer_b,
            outer_bc,
        } => {
            if !(outer_b > b) || !(outer_a > a) || !(outer_a < outer_b) {
                return Err(DtnError::Geometry(format!(
                    "outer surface ({outer_a}, {outer_b}) must enclose ({a}, {b}) and have A < B"
                )));
            }
            let inner = (b - a) * (b + a);
            let outer2 = (outer_b - outer_a) * (outer_b + outer_a);
            let mismatch = (inner - outer2).abs() / inner;
            if mismatch > CONFOCAL_TOLERANCE {
                return Err(DtnError::Confocality { mismatch });
            }
            Some(OuterSurface {
                alpha: (outer_a / outer_b).atanh(),
                bc: outer_bc,
            })
        }
        _ => None,
    };
    Ok(Geometry {
        shape,
        a,
        b,
        a_e,
        alpha0,
        outer,
    })
}

impl Geometry {
    /// Argument of the Legendre functions at `alpha`: `cosh(alpha)` (prolate)
    /// or `sinh(alpha)` (oblate, to be read as `i sinh(alpha)`).
    pub fn legendre_arg(&self, alpha: f64) -> f64 {
        match self.shape {
            Shape::Prolate => alpha.cosh(),
            Shape::Oblate => alpha.sinh(),
            Shape::Sphere => alpha,
        }
    }

    /// The factor `w` in `||v||^2 = w V~^T V~ / mu`: `a_E^2 sinh(alpha0)`,
    /// `a_E^2 cosh(alpha0)` or `b^2`.
    pub fn norm_weight(&self) -> f64 {
        match self.shape {
            Shape::Prolate => self.a_e * self.a_e * self.alpha0.sinh(),
            Shape::Oblate => self.a_e * self.a_e * self.alpha0.cosh(),
            Shape::Sphere => self.b * self.b,
        }
    }

    /// Whether the oblate Neumann-to-Dirichlet representation is used.
    pub fn uses_disk_route(&self) -> bool {
        self.shape == Shape::Oblate && self.alpha0.sinh() < DISK_THRESHOLD
    }

    pub fn theta_range(&self) -> (f64, f64) {
        match self.shape {
            Shape::Oblate => (-PI / 2.0, PI / 2.0),
            _ => (0.0, PI),
        }
    }

    /// Argument of the angular Legendre functions: `cos(theta)` or `sin(theta)`.
    pub fn angular_arg(&self, theta: f64) -> f64 {
        match self.shape {
            Shape::Oblate => theta.sin(),
            _ => theta.cos(),
        }
    }

    /// Scale factor `h_alpha` (equal to `h_theta` for spheroids).
    pub fn h_alpha(&self, alpha: f64, theta: f64) -> f64 {
        match self.shape {
            Shape::Sphere => 1.0,
            _ => {
                let s = alpha.sinh();
                let t = theta.sin();
                self.a_e * (s * s + t * t).sqrt()
            }
        }
    }

    /// `h_theta h_phi` on the boundary, the surface element per `dtheta dphi`.
    pub fn area_element(&self, theta: f64) -> f64 {
        let a0 = self.alpha0;
        match self.shape {
            Shape::Sphere => self.b * self.b * theta.sin(),
            Shape::Prolate => self.h_alpha(a0, theta) * self.a_e * a0.sinh() * theta.sin(),
            Shape::Oblate => self.h_alpha(a0, theta) * self.a_e * a0.cosh() * theta.cos(),
        }
    }

    pub fn surface_area(&self) -> f64 {
        let (a, b) = (self.a, self.b);
        match self.shape {
            Shape::Sphere => 4.0 * PI * b * b,
            Shape::Prolate => {
                let e = self.a_e / b;
                2.0 * PI * a * a + 2.0 * PI * a * b * e.asin() / e
            }
            Shape::Oblate => {
                let e = self.a_e / b;
                if a == 0.0 {
                    2.0 * PI * b * b
                } else {
                    2.0 * PI * b * b + PI * a * a / e * ((1.0 + e) / (1.0 - e)).ln()
                }
            }
        }
    }

    pub fn to_cartesian(&self, p: &SpheroidalPoint) -> [f64; 3] {
        let (sp, cp) = p.phi.sin_cos();
        let (st, ct) = p.theta.sin_cos();
        match self.shape {
            Shape::Sphere => [p.alpha * st * cp, p.alpha * st * sp, p.alpha * ct],
            Shape::Prolate => {
                let rho = self.a_e * p.alpha.sinh() * st;
                [rho * cp, rho * sp, self.a_e * p.alpha.cosh() * ct]
            }
            Shape::Oblate => {
                let rho = self.a_e * p.alpha.cosh() * ct;
                [rho * cp, rho * sp, self.a_e * p.alpha.sinh() * st]
            }
        }
    }

    pub fn from_cartesian(&self, x: [f64; 3]) -> SpheroidalPoint {
        let rho = x[0].hypot(x[1]);
        let mut phi = x[1].atan2(x[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        let z = x[2];
        match self.shape {
            Shape::Sphere => {
                let r = rho.hypot(z);
                SpheroidalPoint::new(r, if r > 0.0 { (z / r).clamp(-1.0, 1.0).acos() } else { 0.0 }, phi)
            }
            Shape::Prolate => {
                let r1 = rho.hypot(z - self.a_e);
                let r2 = rho.hypot(z + self.a_e);
                let ch = ((r1 + r2) / (2.0 * self.a_e)).max(1.0);
                let sh = ((ch - 1.0) * (ch + 1.0)).sqrt();
                let theta = if sh > 1e-8 {
                    (rho * ch).atan2(z * sh)
                } else {
                    ((r2 - r1) / (2.0 * self.a_e)).clamp(-1.0, 1.0).acos()
                };
                SpheroidalPoint::new(ch.acosh(), theta, phi)
            }
            Shape::Oblate => {
                let d1 = (rho - self.a_e).hypot(z);
                let d2 = (rho + self.a_e).hypot(z);
                let ch = ((d1 + d2) / (2.0 * self.a_e)).max(1.0);
                let sh = ((ch - 1.0) * (ch + 1.0)).sqrt();
                let theta = if sh > 1e-8 {
                    (z * ch).atan2(rho * sh)
                } else {
                    let t = ((d2 - d1) / (2.0 * self.a_e)).clamp(0.0, 1.0).acos();
                    if z < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                SpheroidalPoint::new(ch.acosh(), theta, phi)
            }
        }
    }

    /// `alpha` of the Steklov boundary (the radius `b` for the sphere).
    pub fn boundary_alpha(&self) -> f64 {
        if self.shape == Shape::Sphere {
            self.b
        } else {
            self.alpha0
        }
    }

    /// Radial range `[lo, hi]` of the problem domain in `alpha`.
    pub fn alpha_range(&self, region: &Region) -> (f64, f64) {
        let a0 = self.boundary_alpha();
        match region {
            Region::Exterior => (a0, f64::INFINITY),
            Region::Interior => (0.0, a0),
            Region::Shell { .. } => (a0, self.outer.map_or(a0, |o| o.alpha)),
        }
    }
}
