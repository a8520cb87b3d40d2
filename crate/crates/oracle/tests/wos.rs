use std::f64::consts::PI;
use steklov_applications::capacity;
use steklov_dtn::{ProblemSpec, Region, Shape};
use steklov_oracle::*;

#[test]
fn sphere_hit_probability_is_b_over_r() {
    let spec = ProblemSpec::sphere(1.0, Region::Exterior);
    let est = wos_hit_probability([0.0, 2.0, 0.0], &spec, &WalkConfig::new(1_000_000, 1.0, 7)).unwrap();
    let r = est.report("sphere R = 2", 0.5, 3.0);
    assert!(r.pass(), "{r:?}");
    assert!(est.stderr < 6e-4);
}

#[test]
fn disk_axis_hit_probability_is_one_half() {
    let spec = ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0);
    let est = wos_hit_probability([0.0, 0.0, 1.0], &spec, &WalkConfig::new(1_000_000, 1.0, 11)).unwrap();
    let r = est.report("disk axis z = b", 0.5, 3.0);
    assert!(r.pass(), "{r:?}");
}

#[test]
fn prolate_far_field_follows_capacity() {
    let spec = ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0);
    let c = capacity(&spec).unwrap();
    let x = [20.0 / 3f64.sqrt(); 3];
    let est = wos_hit_probability(x, &spec, &WalkConfig::new(1_000_000, 1.0, 3)).unwrap();
    let r = est.report("prolate |x| = 20", c / (4.0 * PI * 20.0), 3.0);
    assert!(r.pass(), "{r:?}");
}

#[test]
fn same_seed_same_estimate() {
    let spec = ProblemSpec::exterior(Shape::Oblate, 0.4, 1.0);
    let cfg = WalkConfig::new(40_000, 1.0, 99);
    let a = wos_hit_probability([0.3, 0.2, 1.1], &spec, &cfg).unwrap();
    let b = wos_hit_probability([0.3, 0.2, 1.1], &spec, &cfg).unwrap();
    assert_eq!(a, b);
    let c = wos_hit_probability([0.3, 0.2, 1.1], &spec, &WalkConfig { seed: 100, ..cfg }).unwrap();
    assert_ne!(a.hits, c.hits);
}

#[test]
fn halving_the_shell_stays_within_the_noise() {
    let spec = ProblemSpec::exterior(Shape::Prolate, 0.3, 1.0);
    let cfg = WalkConfig::new(200_000, 1.0, 5).with_eps_shell(1e-3);
    let a = wos_hit_probability([1.0, 0.0, 0.5], &spec, &cfg).unwrap();
    let b = wos_hit_probability([1.0, 0.0, 0.5], &spec, &cfg.with_eps_shell(5e-4)).unwrap();
    let band = 3.0 * (a.stderr + b.stderr);
    assert!((a.estimate - b.estimate).abs() < band, "{a:?} {b:?}");
}

#[test]
fn rejects_bad_starts() {
    let disk = ProblemSpec::exterior(Shape::Oblate, 0.0, 1.0);
    let cfg = WalkConfig::new(10, 1.0, 0);
    let err = wos_hit_probability([0.5, 0.0, 0.0], &disk, &cfg).unwrap_err();
    assert!(err.is_invalid_input());
    let prolate = ProblemSpec::exterior(Shape::Prolate, 0.5, 1.0);
    assert!(wos_hit_probability([0.0, 0.0, 0.5], &prolate, &cfg).is_err());
    assert!(wos_hit_probability([0.0, 0.0, f64::NAN], &prolate, &cfg).is_err());
    let interior = ProblemSpec::interior(Shape::Prolate, 0.5, 1.0);
    assert!(wos_hit_probability([0.0, 0.0, 2.0], &interior, &cfg).is_err());
    assert!(wos_hit_probability([0.0, 0.0, 2.0], &prolate, &WalkConfig { n_walks: 0, ..cfg }).is_err());
}
