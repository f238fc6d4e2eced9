use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use helicity_core::field::{plane_wave_em, FieldGrid, Helicity, Lattice, PlaneWaveSpec};
use num_complex::Complex64;
use serde_json::Value;

fn helicity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helicity"))
        .args(args)
        .env_remove("HELICITY_ALGEBRA_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/plane_wave.json")
}

#[test]
fn derive_matches_snapshot_corpus() {
    let corpus = [
        (
            "nabla-a",
            include_str!("../../core/tests/snapshots/nabla-a.txt"),
        ),
        (
            "nabla-f",
            include_str!("../../core/tests/snapshots/nabla-f.txt"),
        ),
        (
            "weyl-split",
            include_str!("../../core/tests/snapshots/weyl-split.txt"),
        ),
    ];
    for (target, expected) in corpus {
        let o = helicity(&["derive", target]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), expected, "{target}");
    }
}

#[test]
fn derive_json_lists_groups() {
    let o = helicity(&["derive", "nabla-f", "--format", "json"]);
    assert!(o.status.success());
    let labels: Vec<String> = json(&o)["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["label"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(labels.len(), 8);
    assert!(labels.contains(&"divH".to_string()));
}

#[test]
fn unknown_target_is_a_usage_error() {
    let o = helicity(&["derive", "nabla-x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_reports_epsilon_and_conjugation() {
    let three = json(&helicity(&["decompose", "--n", "3"]));
    assert_eq!(three["epsilon"], "i");
    assert_eq!(three["swap"], true);
    assert_eq!(three["all_laws"], true);
    let five = json(&helicity(&["decompose", "--n", "5"]));
    assert_eq!(five["epsilon"], "1");
    assert_eq!(five["swap"], false);
    let four = helicity(&["decompose", "--n", "4"]);
    assert_eq!(four.status.code(), Some(2));
    assert!(stderr(&four).contains("n must be odd"));
}

#[test]
fn rep_of_time_generator_is_gamma0() {
    let e =
        r#"{"signature":{"p":1,"q":3,"complex":false},"terms":[{"blade":[1],"re":"1","im":"0"}]}"#;
    let v = json(&helicity(&["rep", "--basis", "gamma", "--element", e]));
    let diag: Vec<&str> = (0..4)
        .map(|i| v["matrix"][i][i]["re"].as_str().unwrap())
        .collect();
    assert_eq!(diag, ["1/1", "1/1", "-1/1", "-1/1"]);
    let o = helicity(&["rep", "--basis", "pauli", "--element", e]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_suites_pass_and_honour_seed() {
    let o = helicity(&["check", "--suite", "algebra", "--seed", "11"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["seed"], 11);
    assert_eq!(r["failed"], 0);
    let env = Command::new(env!("CARGO_BIN_EXE_helicity"))
        .args(["check", "--suite", "rep"])
        .env("HELICITY_ALGEBRA_SEED", "99")
        .output()
        .unwrap();
    assert!(env.status.success());
    assert_eq!(json(&env)["seed"], 99);
    assert_eq!(
        helicity(&["check", "--suite", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn fixture_is_the_sampled_plane_wave() {
    let spec =
        PlaneWaveSpec::circular([0.3, 0.4, 1.2], Helicity::Plus, Complex64::new(1.0, 0.0)).unwrap();
    let lattice = Lattice::new([5; 4], [0.1; 4], [false; 4]).unwrap();
    let regenerated = plane_wave_em(&spec, &lattice).unwrap();
    let stored = FieldGrid::read(&fixture()).unwrap();
    assert_eq!(stored.lattice, regenerated.lattice);
    for name in regenerated.names() {
        assert_eq!(
            stored.get(name).unwrap(),
            regenerated.get(name).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn field_fixture_residuals_below_threshold() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("residuals.json");
    let o = helicity(&[
        "field",
        "--input",
        fixture().to_str().unwrap(),
        "--task",
        "maxwell",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = json(&o);
    for key in ["divE", "curlH", "curlE", "divH"] {
        let v = r["residual"][key].as_f64().unwrap();
        assert!(v > 0.0 && v < 0.02, "{key} = {v}");
    }
    let grid = FieldGrid::read(&out).unwrap();
    assert!(grid.contains("divE") && grid.contains("curlH3"));
}

fn potential_grid(dir: &Path, names: &[&str]) -> PathBuf {
    let lattice = Lattice::new([3, 4, 4, 4], [0.1; 4], [false; 4]).unwrap();
    let mut g = FieldGrid::new(lattice);
    for (i, n) in names.iter().enumerate() {
        g.insert_fn(n, |_| Complex64::new(i as f64 + 0.5, -1.0))
            .unwrap();
    }
    let path = dir.join("a.json");
    g.write(&path).unwrap();
    path
}

#[test]
fn constant_potential_gives_zero_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = potential_grid(dir.path(), &["A0", "A1", "A2", "A3"]);
    let o = helicity(&["field", "--input", path.to_str().unwrap(), "--task", "em"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = json(&o);
    let res = r["residual"].as_object().unwrap();
    assert_eq!(res.len(), 7);
    assert!(res.values().all(|v| v.as_f64() == Some(0.0)));
}

#[test]
fn missing_components_are_listed() {
    let dir = tempfile::tempdir().unwrap();
    let path = potential_grid(dir.path(), &["A0", "A1", "A3"]);
    let o = helicity(&["field", "--input", path.to_str().unwrap(), "--task", "em"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("A2"), "{}", stderr(&o));
    std::fs::write(dir.path().join("bad.json"), "{not json").unwrap();
    let bad = dir.path().join("bad.json");
    let o = helicity(&[
        "field",
        "--input",
        bad.to_str().unwrap(),
        "--task",
        "maxwell",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

fn wave_orders(h: &str) -> Vec<Vec<Option<f64>>> {
    let o = helicity(&[
        "wave",
        "--k",
        "0,0,1",
        "--helicity",
        h,
        "--h",
        "0.25",
        "--refine",
        "3",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_value(json(&o)["orders"].clone()).unwrap()
}

#[test]
fn wave_orders_are_second_and_helicity_symmetric() {
    let plus = wave_orders("+");
    let minus = wave_orders("-");
    for (p, m) in plus.iter().zip(&minus) {
        for (a, b) in p.iter().zip(m) {
            match (a, b) {
                (Some(a), Some(b)) => {
                    assert!((a - 2.0).abs() < 0.4, "{a}");
                    assert!((a - b).abs() < 1e-6);
                }
                (None, None) => {}
                other => panic!("{other:?}"),
            }
        }
    }
}

#[test]
fn wave_single_level_and_zero_k() {
    let o = helicity(&["wave", "--k", "0,0,1", "--helicity", "+", "--refine", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(!text.contains("p("));
    let o = helicity(&["wave", "--k", "0,0,0", "--helicity", "-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nonzero"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["decompose", "--n", "7"],
        vec!["derive", "weyl-split", "--format", "json"],
        vec!["check", "--suite", "rep"],
        vec![
            "wave",
            "--k",
            "1,-2,2",
            "--helicity",
            "-",
            "--refine",
            "2",
            "--format",
            "json",
        ],
    ] {
        let a = helicity(&args);
        let b = helicity(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
