use crate::kind::{seeds_dd, Kind};
use crate::quadrature::{quadrature_oracle, quadrature_slice};
use crate::recurrence::{axis_depth, axis_generic, pack, slices_generic};
use crate::Result;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steklov_numerics::Dd;

/// Relative tolerance of the recurrence-versus-quadrature gate.
pub const GATE_TOLERANCE: f64 = 1e-8;
const GATE_FLOOR: f64 = 1e-14;

/// Relative accuracy asked of the quadrature reference.
const REFERENCE_TOLERANCE: f64 = 1e-14;
const SAMPLE_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    Recurrence,
    Quadrature,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateReport {
    pub checked: usize,
    /// Largest relative discrepancy among checked entries.
    pub worst: f64,
    pub fallback_slices: Vec<usize>,
}

/// Coupling integrals `H^m_{n,n'}` for `0 <= m <= min(n, n') <= n_max`.
#[derive(Debug, Clone)]
pub struct CouplingTable {
    pub kind: Kind,
    pub z: f64,
    pub n_max: usize,
    entries: Vec<Vec<f64>>,
    modes: Vec<BuildMode>,
    pub gate: Option<GateReport>,
}

impl CouplingTable {
    fn from_packed(kind: Kind, z: f64, n_max: usize, packed: Vec<Vec<Dd>>, mode: BuildMode) -> Self {
        CouplingTable {
            kind,
            z,
            n_max,
            entries: packed
                .into_iter()
                .map(|s| s.into_iter().map(Dd::to_f64).collect())
                .collect(),
            modes: vec![mode; n_max + 1],
            gate: None,
        }
    }

    /// Entry `H^m_{n,n'}`; zero outside the index range or for odd `n + n'`.
    pub fn get(&self, m: usize, n: usize, np: usize) -> f64 {
        if m > self.n_max || n > self.n_max || np > self.n_max || m > n || m > np || (n + np) % 2 == 1 {
            return 0.0;
        }
        let size = self.n_max + 1 - m;
        self.entries[m][(n - m) * size + (np - m)]
    }

    /// Row-major block of order `m`, rows and columns `n = m..=n_max`.
    pub fn slice(&self, m: usize) -> &[f64] {
        &self.entries[m]
    }

    pub fn mode(&self, m: usize) -> BuildMode {
        self.modes[m]
    }
}

/// Recurrence table without the quadrature gate.
pub fn build_recurrence(kind: Kind, z: f64, n_max: usize) -> Result<CouplingTable> {
    let (h00, h11) = seeds_dd(kind, z)?;
    let zd = Dd::new(z);
    let axis = axis_generic(kind, zd * zd, h00, h11, axis_depth(n_max));
    let packed = pack(&slices_generic(&axis, n_max)?, n_max);
    Ok(CouplingTable::from_packed(kind, z, n_max, packed, BuildMode::Recurrence))
}

/// Table built entirely by quadrature.
pub fn build_quadrature(kind: Kind, z: f64, n_max: usize) -> Result<CouplingTable> {
    let packed = (0..=n_max)
        .map(|m| quadrature_slice(kind, z, m, n_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(CouplingTable::from_packed(kind, z, n_max, packed, BuildMode::Quadrature))
}

fn gate_sample(n_max: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut picks = Vec::new();
    for n in m..=n_max {
        for np in (n..=n_max).step_by(2) {
            if rng.random::<f64>() < SAMPLE_FRACTION {
                picks.push((n, np));
            }
        }
    }
    let hi = n_max;
    let corners = [
        (hi, hi),
        (hi.saturating_sub(1), hi.saturating_sub(1)),
        (hi.saturating_sub(2), hi),
        (hi.saturating_sub(3), hi.saturating_sub(1)),
    ];
    for (n, np) in corners {
        if n >= m && np >= m && !picks.contains(&(n, np)) {
            picks.push((n, np));
        }
    }
    picks
}

/// Recurrence table checked against quadrature on a random 5% sample plus
/// the highest-index corners of every slice. Slices with a discrepancy above
/// [`GATE_TOLERANCE`] are rebuilt by quadrature.
pub fn build(kind: Kind, z: f64, n_max: usize) -> Result<CouplingTable> {
    let mut table = build_recurrence(kind, z, n_max)?;
    let seed = z.to_bits() ^ ((n_max as u64) << 48) ^ kind as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GateReport {
        checked: 0,
        worst: 0.0,
        fallback_slices: Vec::new(),
    };
    for m in 0..=n_max {
        let mut bad = false;
        for (n, np) in gate_sample(n_max, m, &mut rng) {
            // An entry the adaptive reference cannot settle (deep cancellation)
            // sends the slice to the composite rule.
            let Ok(reference) = quadrature_oracle(kind, z, m, n, np, REFERENCE_TOLERANCE) else {
                bad = true;
                continue;
            };
            let err = (table.get(m, n, np) - reference).abs() / reference.abs().max(GATE_FLOOR);
            report.checked += 1;
            report.worst = report.worst.max(err);
            if !(err <= GATE_TOLERANCE) {
                bad = true;
            }
        }
        if bad {
            let slice = quadrature_slice(kind, z, m, n_max)?;
            table.entries[m] = slice.into_iter().map(Dd::to_f64).collect();
            table.modes[m] = BuildMode::Quadrature;
            report.fallback_slices.push(m);
        }
    }
    table.gate = Some(report);
    Ok(table)
}

/// F-bar table obtained from the prolate recurrence continued to an
/// imaginary argument, `F-bar(z) = i F(i z)`.
pub fn continuation_fbar(z: f64, n_max: usize) -> Result<CouplingTable> {
    Kind::FBar.check(z)?;
    let zd = Dd::new(z);
    let i = Complex::new(Dd::ZERO, Dd::ONE);
    let ash = (Dd::ONE / zd).asinh();
    let root = (zd * zd + 1.0).sqrt();
    // F(iz): 2 asin(1/(iz)) = -2i asinh(1/z); (iz)^2 asin(1/(iz)) - sqrt((iz)^2 - 1)
    let f00 = Complex::new(Dd::ZERO, ash * -2.0);
    let f11 = Complex::new(Dd::ZERO, zd * zd * ash - root);
    let z2 = Complex::new(-(zd * zd), Dd::ZERO);
    let axis = axis_generic(Kind::F, z2, f00, f11, axis_depth(n_max));
    let packed = pack(&slices_generic(&axis, n_max)?, n_max)
        .into_iter()
        .map(|s| s.into_iter().map(|v| (i * v).re).collect())
        .collect();
    Ok(CouplingTable::from_packed(Kind::FBar, z, n_max, packed, BuildMode::Recurrence))
}
