use crate::{CouplingError, Result};
use steklov_numerics::Dd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Prolate: `f = 1/sqrt(z^2 - x^2)`, `z = cosh(alpha_0)`.
    F,
    /// Oblate: `f = 1/sqrt(z^2 + x^2)`, `z = sinh(alpha_0)`.
    FBar,
    /// Oblate Neumann-to-Dirichlet: `f = sqrt(z^2 + x^2)`.
    GBar,
}

impl Kind {
    pub(crate) fn check(self, z: f64) -> Result<()> {
        match self {
            Kind::F if !(z > 1.0) => Err(CouplingError::Domain {
                kind: self,
                z,
                requirement: "z > 1",
            }),
            Kind::FBar if z == 0.0 => Err(CouplingError::Divergent),
            Kind::FBar | Kind::GBar if !(z >= 0.0) || !z.is_finite() => Err(CouplingError::Domain {
                kind: self,
                z,
                requirement: "z >= 0",
            }),
            _ => Ok(()),
        }
    }

    /// Coefficients `(a, b, sign)` of the companion ladder
    /// `H_{n+1,1} = -(n-a)/(n+b) H_{n-1,1} + sign (2n+1)/(n+b) z^2 H_{n,0}`.
    pub(crate) fn companion(self) -> (f64, f64, f64) {
        match self {
            Kind::F => (1.0, 2.0, 1.0),
            Kind::FBar => (1.0, 2.0, -1.0),
            Kind::GBar => (3.0, 4.0, -1.0),
        }
    }
}

pub(crate) fn seeds_dd(kind: Kind, z: f64) -> Result<(Dd, Dd)> {
    kind.check(z)?;
    let zd = Dd::new(z);
    let z2 = zd * zd;
    Ok(match kind {
        Kind::F => {
            let a = (Dd::ONE / zd).asin();
            let w = ((zd - 1.0) * (zd + 1.0)).sqrt();
            (a * 2.0, z2 * a - w)
        }
        Kind::GBar if z == 0.0 => (Dd::ONE, Dd::new(0.5)),
        Kind::FBar => {
            let s = (z2 + 1.0).sqrt();
            let l = (Dd::ONE / zd).asinh() * 2.0;
            (l, s - z2 * l * 0.5)
        }
        Kind::GBar => {
            let s = (z2 + 1.0).sqrt();
            let l = (Dd::ONE / zd).asinh() * 2.0;
            (s + z2 * l * 0.5, (z2 + 2.0) * s * 0.25 - z2 * z2 * l * 0.125)
        }
    })
}

/// Closed-form seeds `(H^0_{0,0}, H^0_{1,1})`.
pub fn seed_values(kind: Kind, z: f64) -> Result<(f64, f64)> {
    let (a, b) = seeds_dd(kind, z)?;
    Ok((a.to_f64(), b.to_f64()))
}
