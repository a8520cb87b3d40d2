use crate::block::{
    block_from_parts, ntd_from_parts, scaled_block, solve_block, solve_ntd, sphere_block, BlockSolution, Parity,
};
use crate::geometry::{geometry, Geometry, ProblemSpec, Region, Shape};
use crate::radial::{coefficients_from, radial_values, Coefficients, RadialValues};
use crate::{DtnError, Result};
use nalgebra::DVector;
use std::f64::consts::PI;
use steklov_coupling::{build, Kind};

/// Default truncation order.
pub const DEFAULT_N_MAX: usize = 10;
/// Default truncation order for the disk.
pub const DISK_N_MAX: usize = 20;

/// Mode label; `m` may be negative, `n >= |m|` counts eigenvalues upwards
/// inside the block of order `|m|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex {
    pub m: i64,
    pub n: usize,
}

impl ModeIndex {
    pub fn new(m: i64, n: usize) -> Result<Self> {
        if (n as i64) < m.abs() {
            return Err(DtnError::UnknownMode { m, n });
        }
        Ok(ModeIndex { m, n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// `c^{1/2} F c^{1/2}` with `F` or `F-bar`.
    Direct,
    /// Inverse operator through `G-bar`, for thin oblate spheroids and the disk.
    NeumannToDirichlet,
    /// Closed-form sphere.
    Sphere,
}

/// Mixed problem on the half-spheroid `z > 0` solved by a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfspaceClass {
    SteklovNeumann,
    SteklovDirichlet,
}

/// Class of the mode `(m, n)`: even `m + n` is Neumann, odd is Dirichlet.
pub fn classify_halfspace(m: i64, n: usize) -> HalfspaceClass {
    if (m.unsigned_abs() as usize + n) % 2 == 0 {
        HalfspaceClass::SteklovNeumann
    } else {
        HalfspaceClass::SteklovDirichlet
    }
}

/// One eigenpair of the block of order `m >= 0`. Norm and projection refer
/// to the unnormalized `v = sum_n' V_n' Y_mn'`.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub m: usize,
    pub n: usize,
    pub mu: f64,
    pub v: DVector<f64>,
    pub v_tilde: DVector<f64>,
    /// Reflection parity under `z -> -z`, read off the nonzero coefficients.
    pub parity: Parity,
    /// `||v||^2` on the boundary.
    pub norm2: f64,
    /// `(1, v)` on the boundary.
    pub projection: f64,
}

impl Eigenpair {
    /// `(1, v) / ||v||`.
    pub fn normalized_projection(&self) -> f64 {
        self.projection / self.norm2.sqrt()
    }

    pub fn halfspace_class(&self) -> HalfspaceClass {
        match self.parity {
            Parity::Even => HalfspaceClass::SteklovNeumann,
            Parity::Odd => HalfspaceClass::SteklovDirichlet,
        }
    }

    /// Coefficient on `Y_{m n'}`.
    pub fn coefficient(&self, n_prime: usize) -> f64 {
        self.v[n_prime - self.m]
    }
}

/// Solved spectrum. Immutable once built.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub problem: ProblemSpec,
    pub geometry: Geometry,
    pub n_max: usize,
    pub route: Route,
    pub coefficients: Coefficients,
    blocks: Vec<Vec<Eigenpair>>,
    order: Vec<ModeIndex>,
    pub(crate) boundary: RadialValues,
}

impl Spectrum {
    /// Blocks `m = 0..=n_max`.
    pub fn blocks(&self) -> &[Vec<Eigenpair>] {
        &self.blocks
    }

    pub fn block(&self, m: usize) -> Option<&[Eigenpair]> {
        self.blocks.get(m).map(Vec::as_slice)
    }

    /// Eigenpair of `(m, n)`; negative `m` shares the data of `|m|`.
    pub fn pair(&self, m: i64, n: usize) -> Result<&Eigenpair> {
        let am = m.unsigned_abs() as usize;
        if n < am {
            return Err(DtnError::UnknownMode { m, n });
        }
        self.blocks
            .get(am)
            .and_then(|b| b.get(n - am))
            .ok_or(DtnError::UnknownMode { m, n })
    }

    pub fn mu(&self, m: i64, n: usize) -> Result<f64> {
        self.pair(m, n).map(|p| p.mu)
    }

    /// Number of modes counting `+m` and `-m` separately.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Modes in ascending `mu`; degenerate `+-m` pairs are adjacent, `+m` first.
    pub fn modes(&self) -> &[ModeIndex] {
        &self.order
    }

    pub fn mode(&self, k: usize) -> Option<ModeIndex> {
        self.order.get(k).copied()
    }

    pub fn mu_k(&self, k: usize) -> Option<f64> {
        let i = self.mode(k)?;
        self.mu(i.m, i.n).ok()
    }

    /// `(||v_k||^2, (1, v_k))` of the unnormalized eigenfunction.
    pub fn norm_and_projection(&self, k: usize) -> Result<(f64, f64)> {
        let i = self.mode(k).ok_or(DtnError::UnknownMode { m: 0, n: k })?;
        let p = self.pair(i.m, i.n)?;
        Ok((p.norm2, p.projection))
    }

    /// Eigenvalues of the axisymmetric block.
    pub fn axisymmetric(&self) -> Vec<f64> {
        self.blocks[0].iter().map(|p| p.mu).collect()
    }
}

fn norm_and_projection(geom: &Geometry, spec: &ProblemSpec, c: &[f64], s: &BlockSolution, j: usize) -> (f64, f64) {
    let mu = s.mu[j];
    if mu == 0.0 {
        let area = geom.surface_area();
        return (area / (4.0 * PI), area / (4.0 * PI).sqrt());
    }
    let w = geom.norm_weight();
    let norm2 = w * s.v_tilde[j].norm_squared() / mu;
    let projection = if s.m == 0 {
        let c00 = if spec.has_zero_mode() { 0.0 } else { c[0] };
        (4.0 * PI).sqrt() * w * c00 * s.v[j][0] / mu
    } else {
        0.0
    };
    (norm2, projection)
}

fn finish(
    spec: ProblemSpec,
    geom: Geometry,
    n_max: usize,
    route: Route,
    coefficients: Coefficients,
    boundary: RadialValues,
    solutions: Vec<BlockSolution>,
) -> Result<Spectrum> {
    let mut blocks = Vec::with_capacity(solutions.len());
    for s in solutions {
        let c = coefficients.row(s.m);
        let mut pairs = Vec::with_capacity(s.mu.len());
        for j in 0..s.mu.len() {
            let mu = s.mu[j];
            if !mu.is_finite() || (spec.is_exterior() && !(mu > 0.0)) || mu < 0.0 {
                return Err(DtnError::Block {
                    m: s.m,
                    source: Box::new(DtnError::Integrity(format!("eigenvalue {mu:e} is not admissible"))),
                });
            }
            let (norm2, projection) = norm_and_projection(&geom, &spec, c, &s, j);
            pairs.push(Eigenpair {
                m: s.m,
                n: s.m + j,
                mu,
                v: s.v[j].clone(),
                v_tilde: s.v_tilde[j].clone(),
                parity: s.parity[j],
                norm2,
                projection,
            });
        }
        blocks.push(pairs);
    }
    let mut keyed: Vec<(f64, ModeIndex)> = Vec::new();
    for b in &blocks {
        for p in b {
            keyed.push((p.mu, ModeIndex { m: p.m as i64, n: p.n }));
            if p.m > 0 {
                keyed.push((p.mu, ModeIndex { m: -(p.m as i64), n: p.n }));
            }
        }
    }
    keyed.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.m.abs().cmp(&b.1.m.abs()))
            .then(a.1.n.cmp(&b.1.n))
            .then(b.1.m.cmp(&a.1.m))
    });
    Ok(Spectrum {
        problem: spec,
        geometry: geom,
        n_max,
        route,
        coefficients,
        blocks,
        order: keyed.into_iter().map(|(_, i)| i).collect(),
        boundary,
    })
}

fn wrap<T>(m: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        DtnError::Block { .. } => e,
        e if e.is_invalid_input() => e,
        e => DtnError::Block { m, source: Box::new(e) },
    })
}

/// Solve all blocks `m = 0..=n_max`, choosing the route from the geometry.
pub fn solve_spectrum(spec: &ProblemSpec, n_max: usize) -> Result<Spectrum> {
    let geom = geometry(spec)?;
    let route = match geom.shape {
        Shape::Sphere => Route::Sphere,
        _ if geom.uses_disk_route() => Route::NeumannToDirichlet,
        _ => Route::Direct,
    };
    solve_spectrum_with(spec, n_max, route)
}

/// Solve with an explicit route.
pub fn solve_spectrum_with(spec: &ProblemSpec, n_max: usize, route: Route) -> Result<Spectrum> {
    let geom = geometry(spec)?;
    let alpha0 = geom.boundary_alpha();
    match (route, geom.shape) {
        (Route::Sphere, Shape::Sphere) | (Route::Direct, _) | (Route::NeumannToDirichlet, Shape::Oblate) => {}
        (Route::Sphere, _) => return Err(DtnError::Unsupported("the sphere route needs a == b")),
        (_, Shape::Sphere) => return Err(DtnError::Unsupported("spheres are solved in closed form")),
        (Route::NeumannToDirichlet, _) => {
            return Err(DtnError::Unsupported("the Neumann-to-Dirichlet route is for oblate spheroids"))
        }
    }
    if route == Route::NeumannToDirichlet && spec.has_zero_mode() {
        return Err(DtnError::Unsupported(
            "the Neumann-to-Dirichlet route cannot represent a zero eigenvalue",
        ));
    }
    let boundary = radial_values(&geom, &spec.region, n_max, alpha0)?;
    let coefficients = coefficients_from(&geom, &spec.region, &boundary)?;
    let table = match (route, geom.shape) {
        (Route::NeumannToDirichlet, _) => Some(build(Kind::GBar, alpha0.sinh(), n_max)?),
        (_, Shape::Prolate) => Some(build(Kind::F, alpha0.cosh(), n_max)?),
        (_, Shape::Oblate) => Some(build(Kind::FBar, alpha0.sinh(), n_max)?),
        (_, Shape::Sphere) => None,
    };
    let mut solutions = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let c = coefficients.row(m);
        let s = match &table {
            None => Ok(sphere_block(m, n_max, c)),
            Some(t) if route == Route::NeumannToDirichlet => {
                ntd_from_parts(m, n_max, c, scaled_block(t, m)).and_then(|b| solve_ntd(&b))
            }
            Some(t) => solve_block(&block_from_parts(m, n_max, geom.b, spec.has_zero_mode(), c, scaled_block(t, m))),
        };
        solutions.push(wrap(m, s)?);
    }
    finish(*spec, geom, n_max, route, coefficients, boundary, solutions)
}

/// Closed-form spectrum of the ball (`Interior`) or its complement
/// (`Exterior`) of radius `b`.
pub fn sphere_spectrum(b: f64, region: Region, n_max: usize) -> Result<Spectrum> {
    if matches!(region, Region::Shell { .. }) {
        return Err(DtnError::Unsupported("shells on the sphere branch"));
    }
    solve_spectrum_with(&ProblemSpec::sphere(b, region), n_max, Route::Sphere)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfspace_classes() {
        assert_eq!(classify_halfspace(0, 1), HalfspaceClass::SteklovDirichlet);
        assert_eq!(classify_halfspace(0, 0), HalfspaceClass::SteklovNeumann);
        assert_eq!(classify_halfspace(2, 3), HalfspaceClass::SteklovDirichlet);
        assert_eq!(classify_halfspace(-1, 1), HalfspaceClass::SteklovNeumann);
    }

    #[test]
    fn sphere_closed_form() {
        let s = sphere_spectrum(1.0, Region::Exterior, 3).unwrap();
        let mus: Vec<f64> = (0..5).map(|k| s.mu_k(k).unwrap()).collect();
        for (mu, want) in mus.iter().zip([1.0, 2.0, 2.0, 2.0, 3.0]) {
            assert!((mu - want).abs() < 1e-14);
        }
        let s = sphere_spectrum(2.0, Region::Exterior, 3).unwrap();
        assert!((s.mu(0, 0).unwrap() - 0.5).abs() < 1e-15);
        let p = s.pair(0, 0).unwrap();
        assert!((p.normalized_projection() - (4.0 * PI).sqrt() * 2.0).abs() < 1e-13);
        let s = sphere_spectrum(1.0, Region::Interior, 3).unwrap();
        assert_eq!(s.mu(0, 0).unwrap(), 0.0);
        assert!(sphere_spectrum(1.0, Region::Shell { outer_a: 2.0, outer_b: 2.0, outer_bc: crate::OuterBc::Neumann }, 3).is_err());
    }
}
