use crate::geometry::{geometry, ProblemSpec, Shape};
use crate::radial::coefficients;
use crate::{DtnError, Result};
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use steklov_coupling::{build, CouplingTable, Kind};
use steklov_legendre::harmonic_norm;

/// Largest tolerated `max|M~ - M~^T| / max|M~|` before solving.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;
/// Zero-mode eigenvalues below `ZERO_MODE_TOLERANCE / b` are set to zero.
pub const ZERO_MODE_TOLERANCE: f64 = 1e-10;

/// Reflection parity of a mode under `z -> -z`, i.e. of `m + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// Reduced block `M^_m = F c` over `n = m..=n_max` and its symmetric form.
#[derive(Debug, Clone)]
pub struct OperatorBlock {
    pub m: usize,
    pub n_max: usize,
    /// Length used for the zero-mode threshold (the major semi-axis).
    pub length_scale: f64,
    /// Whether a zero eigenvalue is expected (interior, Neumann shell).
    pub zero_mode: bool,
    pub c: DVector<f64>,
    /// `2 pi a_mn a_mn' X_{n,n'}` with `X = F` or `F-bar`.
    pub f_block: DMatrix<f64>,
    pub m_hat: DMatrix<f64>,
    pub m_tilde: DMatrix<f64>,
}

/// Eigenpairs of one order `m`, ascending in `mu`.
#[derive(Debug, Clone)]
pub struct BlockSolution {
    pub m: usize,
    pub n_max: usize,
    pub mu: Vec<f64>,
    /// Coefficients `[V]_{mn'}` on the spherical harmonics, `n' = m..=n_max`.
    pub v: Vec<DVector<f64>>,
    /// `c^{1/2} V`, unit Euclidean norm.
    pub v_tilde: Vec<DVector<f64>>,
    pub parity: Vec<Parity>,
}

pub(crate) fn scaled_block(table: &CouplingTable, m: usize) -> DMatrix<f64> {
    let n_max = table.n_max;
    let size = n_max + 1 - m;
    DMatrix::from_fn(size, size, |i, j| {
        let (n, np) = (m + i, m + j);
        2.0 * std::f64::consts::PI * harmonic_norm(n, m) * harmonic_norm(np, m) * table.get(m, n, np)
    })
}

pub(crate) fn block_from_parts(
    m: usize,
    n_max: usize,
    length_scale: f64,
    zero_mode: bool,
    c: &[f64],
    f_block: DMatrix<f64>,
) -> OperatorBlock {
    let c = DVector::from_column_slice(c);
    let sq = c.map(f64::sqrt);
    let m_hat = DMatrix::from_fn(f_block.nrows(), f_block.ncols(), |i, j| f_block[(i, j)] * c[j]);
    let m_tilde = DMatrix::from_fn(f_block.nrows(), f_block.ncols(), |i, j| sq[i] * f_block[(i, j)] * sq[j]);
    OperatorBlock {
        m,
        n_max,
        length_scale,
        zero_mode,
        c,
        f_block,
        m_hat,
        m_tilde,
    }
}

/// Assemble the block of order `m` for a spheroidal problem on the direct route.
pub fn assemble_block(spec: &ProblemSpec, m: usize, n_max: usize) -> Result<OperatorBlock> {
    let geom = geometry(spec)?;
    if m > n_max {
        return Err(DtnError::UnknownMode { m: m as i64, n: m });
    }
    let c = coefficients(&geom, &spec.region, n_max)?;
    let f_block = match geom.shape {
        Shape::Sphere => DMatrix::identity(n_max + 1 - m, n_max + 1 - m),
        Shape::Prolate => scaled_block(&build(Kind::F, geom.alpha0.cosh(), n_max)?, m),
        Shape::Oblate => scaled_block(&build(Kind::FBar, geom.alpha0.sinh(), n_max)?, m),
    };
    Ok(block_from_parts(m, n_max, geom.b, spec.has_zero_mode(), c.row(m), f_block))
}

/// Largest asymmetry of `M~` relative to its largest entry.
pub fn hermiticity_defect(block: &OperatorBlock) -> f64 {
    let t = &block.m_tilde;
    let scale = t.amax();
    if scale == 0.0 {
        return 0.0;
    }
    (t - t.transpose()).amax() / scale
}

/// Indices `i` (i.e. `n' = m + i`) of the two reflection classes.
fn parity_classes(size: usize) -> [Vec<usize>; 2] {
    [(0..size).step_by(2).collect(), (1..size).step_by(2).collect()]
}

fn sub_matrix(a: &DMatrix<f64>, idx: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(idx.len(), idx.len(), |i, j| a[(idx[i], idx[j])])
}

/// Make the largest-magnitude entry of `v` positive (flipping `w` with it).
fn fix_phase(v: &mut DVector<f64>, w: &mut DVector<f64>) {
    let i = v.iamax();
    if v[i] < 0.0 {
        v.neg_mut();
        w.neg_mut();
    }
}

struct Raw {
    mu: f64,
    v_tilde: DVector<f64>,
    parity: Parity,
}

fn merge(m: usize, n_max: usize, mut raw: Vec<Raw>, to_v: impl Fn(&Raw) -> DVector<f64>) -> BlockSolution {
    // Stable: equal eigenvalues keep the even class first.
    raw.sort_by(|a, b| a.mu.total_cmp(&b.mu));
    let mut out = BlockSolution {
        m,
        n_max,
        mu: Vec::with_capacity(raw.len()),
        v: Vec::with_capacity(raw.len()),
        v_tilde: Vec::with_capacity(raw.len()),
        parity: Vec::with_capacity(raw.len()),
    };
    for r in raw {
        let mut v = to_v(&r);
        let mut vt = r.v_tilde.clone();
        fix_phase(&mut v, &mut vt);
        out.mu.push(r.mu);
        out.v.push(v);
        out.v_tilde.push(vt);
        out.parity.push(r.parity);
    }
    out
}

/// Diagonalize `M~_m` class by class and recover `V`.
pub fn solve_block(block: &OperatorBlock) -> Result<BlockSolution> {
    let defect = hermiticity_defect(block);
    if !(defect <= HERMITICITY_TOLERANCE) {
        return Err(DtnError::Hermiticity { m: block.m, defect });
    }
    let size = block.c.len();
    let mut raw = Vec::with_capacity(size);
    for (class, idx) in parity_classes(size).iter().enumerate() {
        if idx.is_empty() {
            continue;
        }
        let eig = SymmetricEigen::new(sub_matrix(&block.m_tilde, idx));
        for (k, &mu) in eig.eigenvalues.iter().enumerate() {
            let mut vt = DVector::zeros(size);
            for (i, &row) in idx.iter().enumerate() {
                vt[row] = eig.eigenvectors[(i, k)];
            }
            let mut mu = mu;
            if block.zero_mode && mu.abs() < ZERO_MODE_TOLERANCE / block.length_scale {
                mu = 0.0;
                if let Some(i) = block.c.iter().position(|&c| c == 0.0) {
                    vt = DVector::zeros(size);
                    vt[i] = 1.0;
                }
            }
            raw.push(Raw {
                mu,
                v_tilde: vt,
                parity: Parity::of(block.m + block.m + class),
            });
        }
    }
    let sq = block.c.map(f64::sqrt);
    Ok(merge(block.m, block.n_max, raw, |r| {
        let mut v = DVector::zeros(size);
        if r.mu == 0.0 {
            // Zero mode: the constant harmonic, supported where c vanishes.
            for i in 0..size {
                if block.c[i] == 0.0 {
                    v[i] = r.v_tilde[i];
                }
            }
            return v;
        }
        let fv = &block.f_block * sq.component_mul(&r.v_tilde);
        for i in 0..size {
            v[i] = if block.c[i] > 0.0 { r.v_tilde[i] / sq[i] } else { fv[i] / r.mu };
        }
        v
    }))
}

/// Block of the sphere. `M~` is diagonal, so `mu = c` exactly.
pub(crate) fn sphere_block(m: usize, n_max: usize, c: &[f64]) -> BlockSolution {
    let size = c.len();
    let raw = (0..size)
        .map(|i| Raw {
            mu: c[i],
            v_tilde: DVector::from_fn(size, |j, _| if i == j { 1.0 } else { 0.0 }),
            parity: Parity::of(m + m + i % 2),
        })
        .collect();
    merge(m, n_max, raw, |r| {
        r.v_tilde.zip_map(&DVector::from_column_slice(c), |v, c| if c > 0.0 { v / c.sqrt() } else { v })
    })
}

/// Neumann-to-Dirichlet block: the matrix `c^{-1/2} G c^{-1/2}` with
/// `G = 2 pi a_mn a_mn' G-bar_{n,n'}`, whose eigenvalues are `1 / mu`.
#[derive(Debug, Clone)]
pub struct NtdBlock {
    pub m: usize,
    pub n_max: usize,
    pub c: DVector<f64>,
    pub g_block: DMatrix<f64>,
    pub k_tilde: DMatrix<f64>,
}

pub(crate) fn ntd_from_parts(m: usize, n_max: usize, c: &[f64], g_block: DMatrix<f64>) -> Result<NtdBlock> {
    if let Some(i) = c.iter().position(|&c| !(c > 0.0)) {
        return Err(DtnError::IllConditioned {
            m,
            n: m + i,
            detail: "the Neumann-to-Dirichlet route divides by c_mn, which vanishes".into(),
        });
    }
    let c = DVector::from_column_slice(c);
    let isq = c.map(|c| 1.0 / c.sqrt());
    let k_tilde = DMatrix::from_fn(g_block.nrows(), g_block.ncols(), |i, j| isq[i] * g_block[(i, j)] * isq[j]);
    Ok(NtdBlock {
        m,
        n_max,
        c,
        g_block,
        k_tilde,
    })
}

pub fn solve_ntd(block: &NtdBlock) -> Result<BlockSolution> {
    let size = block.c.len();
    let t = &block.k_tilde;
    let defect = (t - t.transpose()).amax() / t.amax().max(f64::MIN_POSITIVE);
    if !(defect <= HERMITICITY_TOLERANCE) {
        return Err(DtnError::Hermiticity { m: block.m, defect });
    }
    let mut raw = Vec::with_capacity(size);
    for (class, idx) in parity_classes(size).iter().enumerate() {
        if idx.is_empty() {
            continue;
        }
        let eig = SymmetricEigen::new(sub_matrix(t, idx));
        for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
            if !(lambda > 0.0) {
                return Err(DtnError::Integrity(format!(
                    "Neumann-to-Dirichlet eigenvalue {lambda:e} of order {} is not positive",
                    block.m
                )));
            }
            let mut vt = DVector::zeros(size);
            for (i, &row) in idx.iter().enumerate() {
                vt[row] = eig.eigenvectors[(i, k)];
            }
            raw.push(Raw {
                mu: 1.0 / lambda,
                v_tilde: vt,
                parity: Parity::of(block.m + block.m + class),
            });
        }
    }
    Ok(merge(block.m, block.n_max, raw, |r| {
        r.v_tilde.component_div(&block.c.map(f64::sqrt))
    }))
}

/// Order-`m` block of the unit disk on the Neumann-to-Dirichlet route.
pub fn disk_ntd_block(m: usize, n_max: usize) -> Result<BlockSolution> {
    let spec = ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0);
    let geom = geometry(&spec)?;
    if m > n_max {
        return Err(DtnError::UnknownMode { m: m as i64, n: m });
    }
    let c = coefficients(&geom, &spec.region, n_max)?;
    let g = scaled_block(&build(Kind::GBar, 0.0, n_max)?, m);
    solve_ntd(&ntd_from_parts(m, n_max, c.row(m), g)?)
}
