use steklov_dtn::{ProblemSpec, Shape};

/// Axisymmetric spheroid `(rho/equatorial)^2 + (z/polar)^2 = 1`; a zero
/// polar semi-axis is the flat disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spheroid {
    pub equatorial: f64,
    pub polar: f64,
}

impl Spheroid {
    /// Boundary of `spec` (the inner surface for a shell).
    pub fn of(spec: &ProblemSpec) -> Self {
        match spec.shape {
            Shape::Prolate => Spheroid {
                equatorial: spec.a,
                polar: spec.b,
            },
            Shape::Oblate => Spheroid {
                equatorial: spec.b,
                polar: spec.a,
            },
            Shape::Sphere => Spheroid {
                equatorial: spec.b,
                polar: spec.b,
            },
        }
    }

    pub fn size(&self) -> f64 {
        self.equatorial.max(self.polar)
    }

    /// Strictly inside, or on the disk.
    pub fn contains(&self, x: [f64; 3]) -> bool {
        let rho = x[0].hypot(x[1]);
        if self.polar == 0.0 {
            return x[2] == 0.0 && rho <= self.equatorial;
        }
        let (u, v) = (rho / self.equatorial, x[2] / self.polar);
        u * u + v * v < 1.0
    }

    /// Euclidean distance from `x` to the surface.
    pub fn distance(&self, x: [f64; 3]) -> f64 {
        let rho = x[0].hypot(x[1]);
        let z = x[2].abs();
        let (p, e) = (self.polar, self.equatorial);
        if p == 0.0 {
            return if rho <= e { z } else { (rho - e).hypot(z) };
        }
        if p == e {
            return (rho.hypot(z) - e).abs();
        }
        if e > p {
            ellipse_distance(e, p, rho, z)
        } else {
            ellipse_distance(p, e, z, rho)
        }
    }
}

/// Distance from `(y0, y1)`, both `>= 0`, to the ellipse with semi-axes
/// `e0 > e1 > 0`. The closest point is `(r0 y0 / (s + r0), y1 / (s + 1))`
/// scaled back, where `s` is the root of
/// `G(s) = (r0 z0 / (s + r0))^2 + (z1 / (s + 1))^2 - 1`, `r0 = (e0/e1)^2`.
fn ellipse_distance(e0: f64, e1: f64, y0: f64, y1: f64) -> f64 {
    if y1 > 0.0 {
        if y0 > 0.0 {
            let (z0, z1) = (y0 / e0, y1 / e1);
            let g = z0 * z0 + z1 * z1 - 1.0;
            if g == 0.0 {
                return 0.0;
            }
            let r0 = (e0 / e1) * (e0 / e1);
            let s = root(r0, z0, z1, g);
            let x0 = r0 * y0 / (s + r0);
            let x1 = y1 / (s + 1.0);
            (x0 - y0).hypot(x1 - y1)
        } else {
            (y1 - e1).abs()
        }
    } else {
        let numer = e0 * y0;
        let denom = (e0 - e1) * (e0 + e1);
        if numer < denom {
            let t = numer / denom;
            let x0 = e0 * t;
            let x1 = e1 * ((1.0 - t) * (1.0 + t)).sqrt();
            (x0 - y0).hypot(x1)
        } else {
            (y0 - e0).abs()
        }
    }
}

/// Safeguarded Newton on the bracket of `G`, which is decreasing and convex.
fn root(r0: f64, z0: f64, z1: f64, g: f64) -> f64 {
    let n0 = r0 * z0;
    let (mut lo, mut hi) = if g < 0.0 {
        (z1 - 1.0, 0.0)
    } else {
        ((z1 - 1.0).max(n0 - r0).max(0.0), n0.hypot(z1) - 1.0)
    };
    let eval = |s: f64| {
        let a = n0 / (s + r0);
        let b = z1 / (s + 1.0);
        (a * a + b * b - 1.0, -2.0 * (a * a / (s + r0) + b * b / (s + 1.0)))
    };
    // Newton from the left endpoint never overshoots a convex decreasing root.
    let mut s = lo;
    for _ in 0..200 {
        let (f, df) = eval(s);
        if f == 0.0 {
            return s;
        }
        if f > 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let mut next = s - f / df;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - s).abs() <= 4.0 * f64::EPSILON * (1.0 + s.abs()) || next == lo || next == hi {
            return next;
        }
        s = next;
    }
    s
}
