use num_complex::Complex64;
use std::f64::consts::PI;
use steklov_applications::surface_area;
use steklov_coupling::Kind;
use steklov_dtn::*;
use steklov_oracle::*;

fn worst_residual(spec: &ProblemSpec, n_max: usize) -> f64 {
    let s = solve_spectrum(spec, n_max).unwrap();
    (0..6).map(|k| steklov_residual(&s, k, 12, 1e-4).unwrap()).fold(0.0, f64::max)
}

#[test]
fn residual_is_small_and_shrinks_with_truncation() {
    for shape in [Shape::Prolate, Shape::Oblate] {
        let spec = ProblemSpec::exterior(shape, 0.5, 1.0);
        let r: Vec<f64> = (6..=10).map(|n| worst_residual(&spec, n)).collect();
        assert!(r[4] < 1e-3, "{shape:?}: {r:?}");
        assert!(r[4] < r[0]);
        for w in r.windows(2) {
            assert!(w[1] <= 2.0 * w[0], "{shape:?}: {r:?}");
        }
    }
}

#[test]
fn lowest_prolate_mode_residual() {
    let s = solve_spectrum(&ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0), 10).unwrap();
    assert_eq!(s.mode(0), Some(ModeIndex { m: 0, n: 0 }));
    assert!(steklov_residual(&s, 0, 16, 1e-4).unwrap() < 1e-3);
}

#[test]
fn sphere_residual_is_at_rounding_level() {
    for region in [Region::Exterior, Region::Interior] {
        let s = sphere_spectrum(1.0, region, 6).unwrap();
        for k in 0..10 {
            let r = steklov_residual(&s, k, 8, 1e-4).unwrap();
            assert!(r < 1e-10, "{region:?} k={k}: {r}");
        }
    }
}

#[test]
fn interior_zero_mode_has_zero_residual() {
    let s = solve_spectrum(&ProblemSpec::interior(Shape::Oblate, 0.5, 1.0), 8).unwrap();
    assert_eq!(s.mu_k(0), Some(0.0));
    assert!(steklov_residual(&s, 0, 8, 1e-4).unwrap() < 1e-10);
}

#[test]
fn residual_rejects_bad_arguments() {
    let s = solve_spectrum(&ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0), 4).unwrap();
    assert!(steklov_residual(&s, s.len(), 8, 1e-4).is_err());
    assert!(matches!(steklov_residual(&s, 0, 3, 1e-4), Err(OracleError::DegenerateGrid { resolution: 3 })));
    assert!(steklov_residual(&s, 0, 8, 0.0).is_err());
    assert!(steklov_residual(&s, 0, 8, 10.0).is_err());
}

#[test]
fn surface_quadrature_recovers_areas() {
    let sphere = ProblemSpec::sphere(1.0, Region::Exterior);
    let one = surface_quadrature(|_, _| 1.0, &sphere, 16).unwrap();
    assert!((one - 4.0 * PI).abs() < 1e-12);
    for shape in [Shape::Prolate, Shape::Oblate] {
        let spec = ProblemSpec::exterior(shape, 0.5, 1.0);
        let area = surface_quadrature(|_, _| 1.0, &spec, 40).unwrap();
        assert!((area - surface_area(&spec).unwrap()).abs() < 1e-10, "{shape:?}: {area}");
    }
    // Odd harmonics integrate to zero; complex integrands are supported.
    let z = surface_quadrature(|t, p| Complex64::from_polar(t.cos(), p), &sphere, 16).unwrap();
    assert!(z.norm() < 1e-13);
    assert!(matches!(
        surface_quadrature(|_, _| 1.0, &sphere, 3),
        Err(OracleError::DegenerateGrid { .. })
    ));
}

#[test]
fn gram_matrix_of_normalized_eigenfunctions() {
    for shape in [Shape::Prolate, Shape::Oblate] {
        for region in [Region::Exterior, Region::Interior] {
            let s = solve_spectrum(&ProblemSpec::new(shape, region, 0.5, 1.0), 30).unwrap();
            let d = gram_defect(&s, 20, 160, 24).unwrap();
            assert!(d < 1e-10, "{shape:?} {region:?}: {d:e}");
        }
    }
    let s = solve_spectrum(&ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0), 4).unwrap();
    assert!(gram_defect(&s, s.len() + 1, 40, 8).is_err());
}

#[test]
fn coupling_gate_reports_pass() {
    for (kind, z) in [(Kind::GBar, 0.0), (Kind::FBar, 1.0), (Kind::F, 2.0)] {
        let r = coupling_gate(kind, z, 6).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.budget() > 0);
    }
}

#[test]
fn reports_serialize() {
    let mut log = OracleLog::new();
    log.push(OracleReport::relative("capacity", 8.0, 8.0 + 1e-12, 1e-10, 1));
    let json = serde_json::to_value(&log).unwrap();
    let r = &json["reports"][0];
    assert_eq!(r["quantity"], "capacity");
    assert_eq!(r["pass"], true);
    assert_eq!(r["tolerance_kind"], "relative");
}
