//! Acceptance checks. Prints one line per criterion and exits nonzero if
//! any of them fails.

use std::process::ExitCode;
use std::time::Instant;

use steklov_applications::{crossing_curve, robin_flux_from, RobinParams};
use steklov_cli::commands::{coupling_reports, table_row, tail_rate, wos_reports};
use steklov_dtn::{
    assemble_block, hermiticity_defect, solve_spectrum, sphere_spectrum, Parity, ProblemSpec, Region, Route, Shape,
    Spectrum, DISK_N_MAX,
};
use steklov_numerics::quad::adaptive_gk_semi_infinite;
use steklov_oracle::{gram_defect, steklov_residual, OracleLog};

type Outcome = Result<String, String>;

const PROLATE_EXTERIOR: [(f64, [f64; 6]); 9] = [
    (0.1, [3.960, 6.787, 8.740, 11.041, 12.764, 20.748]),
    (0.2, [2.558, 4.820, 6.523, 6.035, 7.649, 10.797]),
    (0.3, [2.019, 4.011, 5.577, 4.379, 5.924, 7.512]),
    (0.4, [1.717, 3.514, 4.964, 3.554, 5.034, 5.889]),
    (0.5, [1.516, 3.145, 4.489, 3.057, 4.467, 4.926]),
    (0.6, [1.367, 2.844, 4.092, 2.721, 4.054, 4.287]),
    (0.7, [1.250, 2.588, 3.754, 2.475, 3.726, 3.832]),
    (0.8, [1.153, 2.365, 3.464, 2.285, 3.451, 3.490]),
    (0.9, [1.071, 2.171, 3.215, 2.130, 3.212, 3.220]),
];

const OBLATE_EXTERIOR: [(f64, [f64; 6]); 10] = [
    (0.0, [1.158, 2.006, 4.317, 2.755, 3.453, 4.121]),
    (0.1, [1.204, 2.057, 4.314, 2.811, 3.512, 4.197]),
    (0.2, [1.220, 2.094, 4.206, 2.796, 3.539, 4.166]),
    (0.3, [1.217, 2.117, 4.040, 2.732, 3.536, 4.058]),
    (0.4, [1.200, 2.129, 3.850, 2.634, 3.506, 3.900]),
    (0.5, [1.173, 2.128, 3.666, 2.520, 3.453, 3.721]),
    (0.6, [1.141, 2.118, 3.498, 2.401, 3.381, 3.543]),
    (0.7, [1.106, 2.098, 3.350, 2.286, 3.295, 3.379]),
    (0.8, [1.070, 2.071, 3.220, 2.180, 3.200, 3.234]),
    (0.9, [1.034, 2.038, 3.105, 2.085, 3.101, 3.108]),
];

const WOS_SEED: u64 = 20_240_917;

fn ok(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn with_failures(head: String, failures: &[String]) -> String {
    if failures.is_empty() {
        head
    } else {
        format!("{head}; {}", failures.join(", "))
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    format!("error: {err}")
}

fn table(shape: Shape, rows: &[(f64, [f64; 6])]) -> Outcome {
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (ratio, want) in rows {
        let got = table_row(shape, *ratio, 1.0, 10).map_err(e)?;
        for (g, w) in got.iter().zip(want) {
            let d = (g - w).abs();
            worst = worst.max(d);
            if d > 1e-3 {
                bad.push(format!("a/b={ratio}: {g:.5} vs {w}"));
            }
        }
    }
    ok(bad.is_empty(), with_failures(format!("max deviation {worst:.2e}"), &bad))
}

fn criterion_1() -> Outcome {
    table(Shape::Prolate, &PROLATE_EXTERIOR)
}

fn criterion_2() -> Outcome {
    let disk = solve_spectrum(&ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0), 10).map_err(e)?;
    if disk.route != Route::NeumannToDirichlet {
        return Err(format!("disk row solved on route {:?}", disk.route));
    }
    table(Shape::Oblate, &OBLATE_EXTERIOR)
}

fn criterion_3() -> Outcome {
    let s = solve_spectrum(&ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0), DISK_N_MAX).map_err(e)?;
    let want = [1.158, 2.006, 4.317, 5.125];
    let got = s.axisymmetric();
    let worst = want.iter().zip(&got).map(|(w, g)| (w - g).abs()).fold(0.0, f64::max);
    ok(worst <= 1e-3, format!("mu_0n = {:.4?}, max deviation {worst:.2e}", &got[..4]))
}

fn criterion_4() -> Outcome {
    let b = 2.0;
    let ext = sphere_spectrum(b, Region::Exterior, 10).map_err(e)?;
    let exact = ext.blocks().iter().flatten().all(|p| p.mu == (p.n as f64 + 1.0) / b);
    let int = sphere_spectrum(b, Region::Interior, 10).map_err(e)?;
    let mu00 = int.mu(0, 0).map_err(e)?;
    let unit = sphere_spectrum(1.0, Region::Exterior, 10).map_err(e)?;
    let mut worst = 0.0f64;
    for i in 0..=120 {
        let qb = 10f64.powf(-3.0 + 6.0 * i as f64 / 120.0);
        let f = robin_flux_from(&unit, &RobinParams::with_q(qb).map_err(e)?).map_err(e)?;
        worst = worst.max((f.ratio - qb / (1.0 + qb)).abs());
    }
    ok(
        exact && mu00 == 0.0 && worst <= 1e-12,
        format!("exterior exact: {exact}, interior mu00 = {mu00}, Collins-Kimball deviation {worst:.2e}"),
    )
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for a in [0.1, 0.05] {
        let s = solve_spectrum(&ProblemSpec::exterior(Shape::Prolate, a, 1.0), 10).map_err(e)?;
        let v = [
            s.mu(0, 0).map_err(e)? * a * (1.0 / a).ln(),
            s.mu(1, 1).map_err(e)? * a,
            s.mu(2, 2).map_err(e)? * a / 2.0,
        ];
        pass &= v.iter().all(|x| (0.85..=1.15).contains(x));
        parts.push(format!("a={a}: {v:.3?}"));
    }
    ok(pass, parts.join(", "))
}

fn criterion_6() -> Outcome {
    let m = |r: f64| table_row(Shape::Oblate, r, 1.0, 10).map(|row| row[0]).map_err(e);
    let (m0, m2, m1) = (m(0.0)?, m(0.2)?, m(1.0)?);
    let close = (m2 - 1.220).abs() <= 1e-3 && (m0 - 1.158).abs() <= 1e-3 && (m1 - 1.0).abs() <= 1e-3;
    ok(
        close && m2 > m0 && m2 > m1,
        format!("mu00(0) = {m0:.4}, mu00(0.2) = {m2:.4}, mu00(1) = {m1:.4}"),
    )
}

fn summarize(log: &OracleLog) -> Outcome {
    let failed: Vec<String> = log
        .reports()
        .iter()
        .filter(|r| !r.pass())
        .map(|r| format!("{} (error {:.2e})", r.quantity(), r.abs_error()))
        .collect();
    let worst = log.reports().iter().map(|r| r.abs_error() / r.tolerance()).fold(0.0, f64::max);
    ok(
        failed.is_empty(),
        with_failures(format!("{} checks, worst error/tolerance {worst:.1e}", log.len()), &failed),
    )
}

fn criterion_7() -> Outcome {
    summarize(&coupling_reports().map_err(e)?)
}

fn block_integrity(spec: &ProblemSpec, s: &Spectrum) -> Result<(f64, f64, bool), String> {
    let mut herm = 0.0f64;
    let mut orth = 0.0f64;
    let mut sparse = true;
    for m in 0..=s.n_max {
        herm = herm.max(hermiticity_defect(&assemble_block(spec, m, s.n_max).map_err(e)?));
        let block = &s.blocks()[m];
        let c = s.coefficients.row(m);
        for (i, p) in block.iter().enumerate() {
            sparse &= p.v.iter().enumerate().all(|(j, v)| Parity::of(j) == p.parity || *v == 0.0);
            for q in &block[i + 1..] {
                if p.mu == 0.0 || q.mu == 0.0 {
                    continue;
                }
                let w: f64 = (0..c.len()).map(|k| p.v[k] * c[k] * q.v[k]).sum();
                orth = orth.max(w.abs());
            }
        }
    }
    Ok((herm, orth, sparse))
}

fn criterion_8() -> Outcome {
    let mut herm = 0.0f64;
    let mut orth = 0.0f64;
    let mut sparse = true;
    let mut gram = 0.0f64;
    for shape in [Shape::Prolate, Shape::Oblate] {
        for ratio in [0.3, 0.5, 0.8] {
            for region in [Region::Exterior, Region::Interior] {
                let spec = ProblemSpec::new(shape, region, ratio, 1.0);
                let s10 = solve_spectrum(&spec, 10).map_err(e)?;
                let (h, o, sp) = block_integrity(&spec, &s10)?;
                herm = herm.max(h);
                orth = orth.max(o);
                sparse &= sp;
                let s = solve_spectrum(&spec, 30).map_err(e)?;
                gram = gram.max(gram_defect(&s, 20, 160, 24).map_err(e)?);
            }
        }
    }
    ok(
        herm <= 1e-12 && orth < 1e-10 && sparse && gram < 1e-10,
        format!("hermiticity {herm:.1e}, weighted orthogonality {orth:.1e}, parity sparsity exact: {sparse}, Gram defect {gram:.1e}"),
    )
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for shape in [Shape::Prolate, Shape::Oblate] {
        let spec = ProblemSpec::exterior(shape, 0.5, 1.0);
        let mut series = Vec::new();
        for n_max in 6..=10 {
            let s = solve_spectrum(&spec, n_max).map_err(e)?;
            let mut worst = 0.0f64;
            for k in 0..6 {
                worst = worst.max(steklov_residual(&s, k, 12, 1e-4).map_err(e)?);
            }
            series.push(worst);
        }
        pass &= series[4] < 1e-3 && series.windows(2).all(|w| w[1] <= 2.0 * w[0]);
        let shown: Vec<String> = series.iter().map(|r| format!("{r:.1e}")).collect();
        parts.push(format!("{shape:?} [{}]", shown.join(", ")));
    }
    ok(pass, parts.join(", "))
}

fn crossing_specs() -> Vec<(ProblemSpec, usize)> {
    let mut out = vec![(ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0), DISK_N_MAX)];
    for shape in [Shape::Prolate, Shape::Oblate] {
        for ratio in [0.1, 0.5, 0.9] {
            out.push((ProblemSpec::exterior(shape, ratio, 1.0), 10));
        }
    }
    out
}

fn criterion_10() -> Outcome {
    let sphere = sphere_spectrum(1.5, Region::Exterior, 10).map_err(e)?;
    let ls: Vec<f64> = (0..=100).map(|i| 1.5 * 10.0 * i as f64 / 100.0).collect();
    let c = crossing_curve(&sphere, &ls).map_err(e)?;
    let sphere_dev = ls
        .iter()
        .zip(&c.probabilities)
        .map(|(l, p)| (p - (-l / 1.5).exp()).abs())
        .fold(0.0, f64::max);
    let (mut p0_dev, mut slope_dev) = (0.0f64, 0.0f64);
    for (spec, n_max) in crossing_specs() {
        let s = solve_spectrum(&spec, n_max).map_err(e)?;
        let p0 = crossing_curve(&s, &[0.0]).map_err(e)?.probabilities[0];
        p0_dev = p0_dev.max((p0 - 1.0).abs());
        let mu00 = s.mu(0, 0).map_err(e)?;
        slope_dev = slope_dev.max((tail_rate(&s).map_err(e)? - mu00).abs() / mu00);
    }
    ok(
        sphere_dev <= 1e-12 && p0_dev <= 1e-3 && slope_dev <= 0.02,
        format!("sphere deviation {sphere_dev:.1e}, max |P(0) - 1| {p0_dev:.1e}, max tail slope deviation {slope_dev:.1e}"),
    )
}

fn criterion_11() -> Outcome {
    let mut worst = 0.0f64;
    for shape in [Shape::Prolate, Shape::Oblate] {
        let s = solve_spectrum(&ProblemSpec::exterior(shape, 0.5, 1.0), 10).map_err(e)?;
        let area = s.geometry.surface_area();
        let rho = |l: f64| crossing_curve(&s, &[l]).map(|c| c.density[0]).unwrap_or(f64::NAN);
        for q in [0.5, 2.0] {
            let (lt, _) =
                adaptive_gk_semi_infinite(|l| (-q * l).exp() * rho(l), 0.0, 1e-12, 1e-10, 200_000).map_err(e)?;
            let f = robin_flux_from(&s, &RobinParams::with_q(q).map_err(e)?).map_err(e)?;
            let want = f.j_q / (f.j_inf / f.capacity * q * area);
            worst = worst.max((lt - want).abs() / want);
        }
    }
    ok(worst <= 1e-4, format!("max relative deviation {worst:.1e}"))
}

fn criterion_12() -> Outcome {
    let log = wos_reports(1_000_000, WOS_SEED).map_err(e)?;
    let detail: Vec<String> = log
        .reports()
        .iter()
        .map(|r| format!("{:.4} vs {:.4} (tol {:.1e})", r.estimate(), r.reference(), r.tolerance()))
        .collect();
    ok(log.all_pass(), format!("seed {WOS_SEED}: {}", detail.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failures = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {n}: PASS ({secs:.1} s) {d}"),
            Err(d) => {
                failures += 1;
                println!("criterion {n}: FAIL ({secs:.1} s) {d}");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 12 criteria failed");
        ExitCode::FAILURE
    }
}
