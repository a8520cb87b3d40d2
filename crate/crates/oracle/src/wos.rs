use crate::distance::Spheroid;
use crate::report::OracleReport;
use crate::{OracleError, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use steklov_applications::capacity;
use steklov_dtn::ProblemSpec;

/// Walks per random stream; stream `i` is `ChaCha8(seed)` on stream `i`.
const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkConfig {
    pub n_walks: u64,
    /// Walks closer than this to the surface count as hits.
    pub eps_shell: f64,
    /// Beyond this radius the walk returns with probability `C / (4 pi |x|)`.
    pub r_escape: f64,
    pub seed: u64,
}

impl WalkConfig {
    /// `eps_shell = 1e-5 b`, `r_escape = 100 b`.
    pub fn new(n_walks: u64, b: f64, seed: u64) -> Self {
        WalkConfig {
            n_walks,
            eps_shell: 1e-5 * b,
            r_escape: 100.0 * b,
            seed,
        }
    }

    pub fn with_eps_shell(mut self, eps: f64) -> Self {
        self.eps_shell = eps;
        self
    }

    pub fn with_r_escape(mut self, r: f64) -> Self {
        self.r_escape = r;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WosEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub walks: u64,
    pub hits: u64,
    /// Mean number of sphere jumps per walk.
    pub mean_steps: f64,
}

impl WosEstimate {
    /// Report against `reference` with a tolerance of `k` standard errors.
    pub fn report(&self, quantity: impl Into<String>, reference: f64, k: f64) -> OracleReport {
        OracleReport::sigma(quantity, reference, self.estimate, self.stderr, k, self.walks)
    }
}

fn unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z = 2.0 * rng.random::<f64>() - 1.0;
    let (s, c) = (2.0 * PI * rng.random::<f64>()).sin_cos();
    let r = ((1.0 - z) * (1.0 + z)).sqrt();
    [r * c, r * s, z]
}

fn walk<R: Rng>(rng: &mut R, surface: &Spheroid, start: [f64; 3], cfg: &WalkConfig, cap_radius: f64) -> (bool, u64) {
    let mut x = start;
    let mut steps = 0;
    loop {
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        if r >= cfg.r_escape {
            return (rng.random::<f64>() < cap_radius / r, steps);
        }
        let d = surface.distance(x);
        if d <= cfg.eps_shell {
            return (true, steps);
        }
        let u = unit_vector(rng);
        x = [x[0] + d * u[0], x[1] + d * u[1], x[2] + d * u[2]];
        steps += 1;
    }
}

/// Probability that Brownian motion started at `start` ever hits the
/// boundary of an exterior problem, by walk-on-spheres.
pub fn wos_hit_probability(start: [f64; 3], spec: &ProblemSpec, cfg: &WalkConfig) -> Result<WosEstimate> {
    if !spec.is_exterior() {
        return Err(OracleError::Domain("walk-on-spheres needs an exterior problem".into()));
    }
    let cap = capacity(spec)?;
    let surface = Spheroid::of(spec);
    if !start.iter().all(|v| v.is_finite()) || surface.contains(start) || surface.distance(start) == 0.0 {
        return Err(OracleError::Domain(format!("start {start:?} is not strictly outside the boundary")));
    }
    if !(cfg.n_walks > 0) || !(cfg.eps_shell > 0.0) || !(cfg.r_escape > 2.0 * surface.size()) {
        return Err(OracleError::Domain(format!(
            "need n_walks > 0, eps_shell > 0 and r_escape > 2 b (got {cfg:?})"
        )));
    }
    let cap_radius = cap / (4.0 * PI);
    let chunks = cfg.n_walks.div_ceil(CHUNK);
    let (hits, steps) = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i);
            let n = CHUNK.min(cfg.n_walks - i * CHUNK);
            let (mut hits, mut steps) = (0u64, 0u64);
            for _ in 0..n {
                let (hit, s) = walk(&mut rng, &surface, start, cfg, cap_radius);
                hits += hit as u64;
                steps += s;
            }
            (hits, steps)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let n = cfg.n_walks as f64;
    let p = hits as f64 / n;
    Ok(WosEstimate {
        estimate: p,
        stderr: (p * (1.0 - p) / n).sqrt(),
        walks: cfg.n_walks,
        hits,
        mean_steps: steps as f64 / n,
    })
}
