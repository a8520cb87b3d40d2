use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn steklov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steklov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let v = jsonschema::validator_for(&schema(name)).unwrap();
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn json_run(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = steklov(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("steklov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eigenvalue_csv_has_a_header_and_four_digits() {
    let o = steklov(&["eigs", "--shape", "prolate", "--a", "0.5", "--m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,n,mu,multiplicity,parity,halfspace_class"));
    assert_eq!(lines.next(), Some("0,0,1.516,1,even,steklov-neumann"));
    let manifest: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_valid("manifest", &manifest);
    assert_eq!(manifest["command"], "eigs");
    assert_eq!(manifest["parameters"]["geometry"]["a"], 0.5);
}

#[test]
fn precision_overrides_the_default() {
    let o = steklov(&["eigs", "--a", "0.5", "--m", "0", "--precision", "9"]);
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert_eq!(row, "0,0,1.51577591,1,even,steklov-neumann");
}

#[test]
fn json_documents_validate() {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("eigs", vec!["eigs", "--shape", "oblate", "--a", "0.3"]),
        ("eigs", vec!["eigs", "--shape", "oblate", "--a", "0"]),
        ("eigs", vec!["eigs", "--shape", "sphere", "--region", "interior", "--n-max", "4"]),
        ("table1", vec!["eigs", "--table1"]),
        ("table2", vec!["eigs", "--table2"]),
        ("eigfun", vec!["eigfun", "--m", "1", "--n", "2", "--n-theta", "5"]),
        ("eigfun", vec!["eigfun", "--m", "0", "--n", "0", "--n-theta", "5", "--alpha", "1.0"]),
        ("flux", vec!["flux", "--qb-count", "7"]),
        ("flux-aspect", vec!["flux", "--sweep-aspect", "--aspects", "0.2,0.6,1", "--qb", "1,10"]),
        ("crossing", vec!["crossing", "--shape", "oblate", "--l-count", "9"]),
        ("convergence", vec!["convergence", "--n-min", "8", "--modes", "3"]),
        ("oracle", vec!["oracle", "quadrature"]),
    ];
    for (name, args) in cases {
        let doc = json_run(&args);
        assert_valid(name, &doc);
        assert_valid("manifest", &doc["manifest"]);
    }
}

#[test]
fn json_keeps_full_precision() {
    let doc = json_run(&["eigs", "--a", "0.5", "--m", "0"]);
    let mu = doc["rows"][0]["mu"].as_f64().unwrap();
    assert!((mu - 1.5157759109228552).abs() < 1e-12);
}

#[test]
fn oracle_defaults_to_json() {
    let o = steklov(&["oracle", "residual"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid("oracle", &doc);
    assert_eq!(doc["summary"]["all_pass"], true);
}

#[test]
fn output_file_gets_a_manifest() {
    let path = scratch("flux.csv");
    let o = steklov(&["flux", "--shape", "sphere", "--qb-count", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().next(), Some("qb,ratio,j_q,j_inf"));
    assert_eq!(csv.lines().count(), 4);
    let m: Value = serde_json::from_str(&std::fs::read_to_string(format!("{}.manifest.json", path.display())).unwrap())
        .unwrap();
    assert_valid("manifest", &m);
    assert_eq!(m["schema"], "steklov/flux/v1");
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["eigs", "--a", "2"],
        vec!["eigs", "--shape", "prolate", "--a", "0"],
        vec!["eigfun", "--m", "0", "--n", "11"],
        vec!["eigs", "--region", "shell"],
        vec!["crossing", "--region", "interior"],
        vec!["flux", "--qb-min", "-1"],
        vec!["bogus"],
        vec!["oracle", "wos"],
    ] {
        let o = steklov(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failed_oracle_checks_exit_with_three() {
    let o = steklov(&["oracle", "wos", "--walks", "2", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid("oracle", &doc);
    assert_eq!(doc["summary"]["all_pass"], false);
    assert_eq!(doc["manifest"]["seed"], 1);
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["oracle", "wos", "--walks", "3000", "--seed", "11", "--format", "csv"];
    let (a, b) = (steklov(&args), steklov(&args));
    assert_eq!(a.stdout, b.stdout);
    let c = steklov(&["oracle", "wos", "--walks", "3000", "--seed", "12", "--format", "csv"]);
    assert_ne!(a.stdout, c.stdout);
}
