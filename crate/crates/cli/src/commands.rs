use crate::args::*;
use crate::output::{Cell, Report, Table};
use crate::CliError;
use rayon::prelude::*;
use serde_json::json;
use std::f64::consts::PI;
use steklov_applications::{crossing_curve, robin_flux_from, RobinParams};
use steklov_coupling::Kind;
use steklov_dtn::{
    solve_spectrum, sphere_spectrum, HalfspaceClass, OuterBc, Parity, ProblemSpec, Region, Shape, Spectrum,
    SpheroidalPoint, DEFAULT_N_MAX, DISK_N_MAX,
};
use steklov_oracle::{
    coupling_gate, gram_defect, steklov_residual, surface_quadrature, wos_hit_probability, OracleLog, OracleReport,
    WalkConfig,
};

/// Problem described by the geometry flags.
pub fn problem(g: &GeometryArgs) -> Result<ProblemSpec, CliError> {
    let shape = match g.shape {
        ShapeArg::Prolate => Shape::Prolate,
        ShapeArg::Oblate => Shape::Oblate,
        ShapeArg::Sphere => Shape::Sphere,
    };
    let region = match g.region {
        RegionArg::Exterior => Region::Exterior,
        RegionArg::Interior => Region::Interior,
        RegionArg::Shell => {
            let (Some(outer_a), Some(outer_b), Some(bc)) = (g.outer_a, g.outer_b, g.outer_bc) else {
                return Err(CliError::Invalid("a shell needs --outer-a, --outer-b and --outer-bc".into()));
            };
            Region::Shell {
                outer_a,
                outer_b,
                outer_bc: match bc {
                    BcArg::Dirichlet => OuterBc::Dirichlet,
                    BcArg::Neumann => OuterBc::Neumann,
                },
            }
        }
    };
    Ok(match shape {
        Shape::Sphere => ProblemSpec::sphere(g.b, region),
        _ => ProblemSpec::new(shape, region, g.a, g.b),
    })
}

/// Truncation order from the flags: 10 by default, 20 for the disk.
pub fn n_max_for(g: &GeometryArgs, spec: &ProblemSpec) -> usize {
    g.n_max.unwrap_or(if spec.shape == Shape::Oblate && spec.a == 0.0 {
        DISK_N_MAX
    } else {
        DEFAULT_N_MAX
    })
}

fn spectrum(g: &GeometryArgs) -> Result<Spectrum, CliError> {
    let spec = problem(g)?;
    Ok(solve_spectrum(&spec, n_max_for(g, &spec))?)
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn class_name(c: HalfspaceClass) -> &'static str {
    match c {
        HalfspaceClass::SteklovNeumann => "steklov-neumann",
        HalfspaceClass::SteklovDirichlet => "steklov-dirichlet",
    }
}

/// Modes `(m, n)` of the aspect-ratio tables.
pub const TABLE_MODES: [(i64, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// One row of an aspect-ratio table: the six eigenvalues at `a/b`.
pub fn table_row(shape: Shape, ratio: f64, b: f64, n_max: usize) -> Result<[f64; 6], CliError> {
    let s = if ratio == 1.0 {
        sphere_spectrum(b, Region::Exterior, n_max)?
    } else {
        solve_spectrum(&ProblemSpec::exterior(shape, ratio * b, b), n_max)?
    };
    let mut out = [0.0; 6];
    for (o, &(m, n)) in out.iter_mut().zip(&TABLE_MODES) {
        *o = s.mu(m, n)?;
    }
    Ok(out)
}

pub fn eigs(args: &EigsArgs) -> Result<Report, CliError> {
    if args.table1 || args.table2 {
        let (shape, ratios): (Shape, Vec<f64>) = if args.table1 {
            (Shape::Prolate, (1..=10).map(|i| i as f64 / 10.0).collect())
        } else {
            (Shape::Oblate, (0..=10).map(|i| i as f64 / 10.0).collect())
        };
        let n_max = args.geometry.n_max.unwrap_or(DEFAULT_N_MAX);
        let b = args.geometry.b;
        let rows = ratios
            .par_iter()
            .map(|&r| table_row(shape, r, b, n_max).map(|mu| (r, mu)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = Table::new(vec!["a_over_b", "mu00", "mu01", "mu02", "mu11", "mu12", "mu22"]);
        table.default_digits = Some(4);
        for (r, mu) in rows {
            let mut row: Vec<Cell> = vec![Cell::Param(r)];
            row.extend(mu.iter().map(|&v| Cell::from(v)));
            table.push(row);
        }
        return Ok(Report {
            kind: if args.table1 { "table1" } else { "table2" },
            table,
            summary: None,
            seed: None,
        });
    }
    let s = spectrum(&args.geometry)?;
    let mut table = Table::new(vec!["m", "n", "mu", "multiplicity", "parity", "halfspace_class"]);
    table.default_digits = Some(4);
    let only = args.m.map(|m| m.unsigned_abs() as usize);
    if let Some(m) = only {
        if m > s.n_max {
            return Err(CliError::Invalid(format!("|m| = {m} exceeds n_max = {}", s.n_max)));
        }
    }
    for block in s.blocks() {
        for p in block {
            if only.is_some_and(|m| m != p.m) {
                continue;
            }
            table.push(vec![
                p.m.into(),
                p.n.into(),
                p.mu.into(),
                (if p.m == 0 { 1usize } else { 2 }).into(),
                parity_name(p.parity).into(),
                class_name(p.halfspace_class()).into(),
            ]);
        }
    }
    Ok(Report {
        kind: "eigs",
        table,
        summary: Some(json!({ "route": format!("{:?}", s.route), "n_max": s.n_max })),
        seed: None,
    })
}

pub fn eigfun(args: &EigfunArgs) -> Result<Report, CliError> {
    if args.n_theta < 2 || args.n_phi < 1 {
        return Err(CliError::Invalid("need --n-theta >= 2 and --n-phi >= 1".into()));
    }
    let s = spectrum(&args.geometry)?;
    s.pair(args.m, args.n)?;
    let g = s.geometry;
    let (lo, hi) = g.theta_range();
    let mut columns = vec!["theta", "phi", "x", "y", "z", "re_v", "im_v"];
    if args.alpha.is_some() {
        columns.extend(["alpha", "x_ext", "y_ext", "z_ext", "re_ext", "im_ext"]);
    }
    let mut table = Table::new(columns);
    for i in 0..args.n_theta {
        let theta = lo + (hi - lo) * i as f64 / (args.n_theta - 1) as f64;
        for j in 0..args.n_phi {
            let phi = 2.0 * PI * j as f64 / args.n_phi as f64;
            let v = s.eval_eigenfunction(args.m, args.n, theta, phi)?;
            let x = g.to_cartesian(&SpheroidalPoint::new(g.boundary_alpha(), theta, phi));
            let mut row: Vec<Cell> = vec![theta.into(), phi.into(), x[0].into(), x[1].into(), x[2].into(), v.re.into(), v.im.into()];
            if let Some(alpha) = args.alpha {
                let p = SpheroidalPoint::new(alpha, theta, phi);
                let e = s.eval_steklov(args.m, args.n, p)?;
                let y = g.to_cartesian(&p);
                row.extend([alpha.into(), y[0].into(), y[1].into(), y[2].into(), e.re.into(), e.im.into()]);
            }
            table.push(row);
        }
    }
    let p = s.pair(args.m, args.n)?;
    Ok(Report {
        kind: "eigfun",
        table,
        summary: Some(json!({ "mu": p.mu, "norm2": p.norm2, "projection": p.projection })),
        seed: None,
    })
}

fn log_grid(lo: f64, hi: f64, count: usize) -> Result<Vec<f64>, CliError> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) || count == 0 {
        return Err(CliError::Invalid(format!("log grid needs 0 < min <= max and count > 0 (got {lo}, {hi}, {count})")));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.ln(), hi.ln());
    let mut grid: Vec<f64> = (0..count).map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp()).collect();
    grid[0] = lo;
    grid[count - 1] = hi;
    Ok(grid)
}

pub fn flux(args: &FluxArgs) -> Result<Report, CliError> {
    let spec = problem(&args.geometry)?;
    if !spec.is_exterior() {
        return Err(CliError::Invalid("the flux is defined for exterior problems".into()));
    }
    let b = spec.b;
    if args.sweep_aspect {
        let aspects = if args.aspects.is_empty() {
            let start = if spec.shape == Shape::Oblate { 0 } else { 1 };
            (start..=19).map(|i| i as f64 * 0.05).collect()
        } else {
            args.aspects.clone()
        };
        let rows = aspects
            .par_iter()
            .map(|&r| -> Result<Vec<(f64, f64, f64)>, CliError> {
                let g = GeometryArgs { a: r * b, ..args.geometry.clone() };
                let s = if r == 1.0 && spec.shape != Shape::Sphere {
                    sphere_spectrum(b, Region::Exterior, n_max_for(&g, &spec))?
                } else {
                    spectrum(&g)?
                };
                args.qb
                    .iter()
                    .map(|&qb| Ok((r, qb, robin_flux_from(&s, &RobinParams::with_q(qb / b)?)?.ratio)))
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = Table::new(vec!["a_over_b", "qb", "ratio"]);
        for (r, qb, ratio) in rows.into_iter().flatten() {
            table.push(vec![Cell::Param(r), Cell::Param(qb), ratio.into()]);
        }
        return Ok(Report {
            kind: "flux-aspect",
            table,
            summary: None,
            seed: None,
        });
    }
    let s = spectrum(&args.geometry)?;
    let mut table = Table::new(vec!["qb", "ratio", "j_q", "j_inf"]);
    for qb in log_grid(args.qb_min, args.qb_max, args.qb_count)? {
        let f = robin_flux_from(&s, &RobinParams::with_q(qb / b)?)?;
        table.push(vec![qb.into(), f.ratio.into(), f.j_q.into(), f.j_inf.into()]);
    }
    Ok(Report {
        kind: "flux",
        table,
        summary: Some(json!({ "capacity": steklov_applications::capacity_from_spectrum(&s)? })),
        seed: None,
    })
}

/// Least-squares decay rate of `ln P(l)` over `l/b in [3, 6]`.
pub fn tail_rate(s: &Spectrum) -> Result<f64, CliError> {
    let b = s.problem.b;
    let ls: Vec<f64> = (0..=30).map(|i| b * (3.0 + 3.0 * i as f64 / 30.0)).collect();
    let curve = crossing_curve(s, &ls)?;
    let ys: Vec<f64> = curve.probabilities.iter().map(|p| p.ln()).collect();
    let n = ls.len() as f64;
    let (mx, my) = (ls.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in ls.iter().zip(&ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    Ok(-sxy / sxx)
}

pub fn crossing(args: &CrossingArgs) -> Result<Report, CliError> {
    let s = spectrum(&args.geometry)?;
    if !s.problem.is_exterior() {
        return Err(CliError::Invalid("the crossing probability is defined for exterior problems".into()));
    }
    let b = s.problem.b;
    let ls: Vec<f64> = log_grid(args.l_min, args.l_max, args.l_count)?.into_iter().map(|l| l * b).collect();
    let curve = crossing_curve(&s, &ls)?;
    let mut table = Table::new(vec!["l_over_b", "p", "rho"]);
    for ((l, p), r) in ls.iter().zip(&curve.probabilities).zip(&curve.density) {
        table.push(vec![(l / b).into(), (*p).into(), (*r).into()]);
    }
    let p0 = crossing_curve(&s, &[0.0])?.probabilities[0];
    let rate = tail_rate(&s)?;
    let mu00 = s.mu(0, 0)?;
    Ok(Report {
        kind: "crossing",
        table,
        summary: Some(json!({
            "p0": p0,
            "tail_rate": rate,
            "mu00": mu00,
            "tail_rate_relative_deviation": (rate - mu00).abs() / mu00,
            "capacity": curve.capacity,
            "surface_area": curve.surface_area,
        })),
        seed: None,
    })
}

pub fn convergence(args: &ConvergenceArgs) -> Result<Report, CliError> {
    let spec = problem(&args.geometry)?;
    let top = n_max_for(&args.geometry, &spec);
    if args.n_min > top {
        return Err(CliError::Invalid(format!("--n-min {} exceeds --n-max {top}", args.n_min)));
    }
    let spectra = (args.n_min..=top)
        .into_par_iter()
        .map(|n| solve_spectrum(&spec, n))
        .collect::<Result<Vec<_>, _>>()?;
    let reference = spectra.last().expect("non-empty range");
    let mut modes = Vec::new();
    for k in 0..reference.len() {
        let i = reference.mode(k).expect("k < len");
        if i.m >= 0 && modes.len() < args.modes {
            modes.push(i);
        }
    }
    let mut table = Table::new(vec!["n_max", "m", "n", "mu", "abs_error"]);
    for s in &spectra {
        for i in &modes {
            if i.n > s.n_max {
                continue;
            }
            let mu = s.mu(i.m, i.n)?;
            let r = reference.mu(i.m, i.n)?;
            table.push(vec![s.n_max.into(), i.m.into(), i.n.into(), mu.into(), (mu - r).abs().into()]);
        }
    }
    Ok(Report {
        kind: "convergence",
        table,
        summary: Some(json!({ "reference_n_max": top })),
        seed: None,
    })
}

/// Tolerance of the Monte Carlo checks in standard errors.
pub const WOS_SIGMAS: f64 = 3.0;

pub fn coupling_reports() -> Result<OracleLog, CliError> {
    let mut cases = vec![(Kind::GBar, 0.0)];
    for z in [0.1, 0.5, 1.0, 2.0, 5.0] {
        cases.push((Kind::FBar, z));
        cases.push((Kind::GBar, z));
    }
    cases.push((Kind::F, 2.0));
    cases.push((Kind::F, 5.0));
    let reports = cases
        .par_iter()
        .map(|&(k, z)| coupling_gate(k, z, 10))
        .collect::<Result<Vec<_>, _>>()?;
    let mut log = OracleLog::new();
    for r in reports {
        log.push(r);
    }
    Ok(log)
}

pub fn wos_reports(walks: u64, seed: u64) -> Result<OracleLog, CliError> {
    let mut log = OracleLog::new();
    let sphere = ProblemSpec::sphere(1.0, Region::Exterior);
    let e = wos_hit_probability([0.0, 0.0, 2.0], &sphere, &WalkConfig::new(walks, 1.0, seed))?;
    log.push(e.report("hit probability, sphere b=1 from R=2", 0.5, WOS_SIGMAS));
    let disk = ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0);
    let e = wos_hit_probability([0.0, 0.0, 1.0], &disk, &WalkConfig::new(walks, 1.0, seed.wrapping_add(1)))?;
    log.push(e.report("hit probability, disk b=1 from (0,0,1)", 0.5, WOS_SIGMAS));
    let prolate = ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0);
    let c = steklov_applications::capacity(&prolate)?;
    let x = [20.0 / 3f64.sqrt(); 3];
    let e = wos_hit_probability(x, &prolate, &WalkConfig::new(walks, 1.0, seed.wrapping_add(2)))?;
    log.push(e.report("hit probability, prolate a/b=0.5 at |x|=20", c / (4.0 * PI * 20.0), WOS_SIGMAS));
    Ok(log)
}

pub fn residual_reports() -> Result<OracleLog, CliError> {
    let mut log = OracleLog::new();
    for shape in [Shape::Prolate, Shape::Oblate] {
        let spec = ProblemSpec::exterior(shape, 0.5, 1.0);
        let worst = |n: usize| -> Result<f64, CliError> {
            let s = solve_spectrum(&spec, n)?;
            let mut w = 0.0f64;
            for k in 0..6 {
                w = w.max(steklov_residual(&s, k, 12, 1e-4)?);
            }
            Ok(w)
        };
        let r10 = worst(10)?;
        log.push(OracleReport::absolute(
            format!("Steklov residual, {shape:?} a/b=0.5, 6 lowest modes, n_max=10"),
            0.0,
            r10,
            1e-3,
            6,
        ));
    }
    let s = sphere_spectrum(1.0, Region::Exterior, 6)?;
    let mut w = 0.0f64;
    for k in 0..6 {
        w = w.max(steklov_residual(&s, k, 8, 1e-4)?);
    }
    log.push(OracleReport::absolute("Steklov residual, sphere", 0.0, w, 1e-10, 6));
    Ok(log)
}

pub fn quadrature_reports() -> Result<OracleLog, CliError> {
    let mut log = OracleLog::new();
    let sphere = ProblemSpec::sphere(1.0, Region::Exterior);
    let area = surface_quadrature(|_, _| 1.0, &sphere, 16)?;
    log.push(OracleReport::absolute("surface area, sphere b=1", 4.0 * PI, area, 1e-12, 256));
    for shape in [Shape::Prolate, Shape::Oblate] {
        let spec = ProblemSpec::exterior(shape, 0.5, 1.0);
        let area = surface_quadrature(|_, _| 1.0, &spec, 40)?;
        let want = steklov_applications::surface_area(&spec)?;
        log.push(OracleReport::absolute(format!("surface area, {shape:?} a/b=0.5"), want, area, 1e-10, 1600));
        let s = solve_spectrum(&spec, 30)?;
        let d = gram_defect(&s, 20, 160, 24)?;
        log.push(OracleReport::absolute(
            format!("Gram matrix defect, {shape:?} a/b=0.5, 20 modes"),
            0.0,
            d,
            1e-10,
            160 * 24,
        ));
    }
    Ok(log)
}

pub fn oracle(args: &OracleArgs) -> Result<Report, CliError> {
    let needs_seed = matches!(args.check, OracleCheck::Wos | OracleCheck::All);
    let seed = match (needs_seed, args.seed) {
        (true, None) => return Err(CliError::Invalid("Monte Carlo checks need an explicit --seed".into())),
        (_, s) => s,
    };
    let mut log = OracleLog::new();
    let run = |c: OracleCheck| args.check == c || args.check == OracleCheck::All;
    if run(OracleCheck::Coupling) {
        log.extend(coupling_reports()?);
    }
    if run(OracleCheck::Wos) {
        log.extend(wos_reports(args.walks, seed.expect("checked above"))?);
    }
    if run(OracleCheck::Residual) {
        log.extend(residual_reports()?);
    }
    if run(OracleCheck::Quadrature) {
        log.extend(quadrature_reports()?);
    }
    let mut table = Table::new(vec![
        "quantity",
        "reference",
        "estimate",
        "abs_error",
        "rel_error",
        "tolerance",
        "tolerance_kind",
        "budget",
        "pass",
    ]);
    for r in log.reports() {
        table.push(vec![
            r.quantity().into(),
            r.reference().into(),
            r.estimate().into(),
            r.abs_error().into(),
            r.rel_error().into(),
            r.tolerance().into(),
            serde_json::to_value(r.tolerance_kind())
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default()
                .into(),
            r.budget().into(),
            r.pass().into(),
        ]);
    }
    Ok(Report {
        kind: "oracle",
        table,
        summary: Some(json!({ "checks": log.len(), "all_pass": log.all_pass() })),
        seed,
    })
}

/// Run a parsed command.
pub fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Eigs(a) => eigs(a),
        Command::Eigfun(a) => eigfun(a),
        Command::Flux(a) => flux(a),
        Command::Crossing(a) => crossing(a),
        Command::Convergence(a) => convergence(a),
        Command::Oracle(a) => oracle(a),
    }
}
