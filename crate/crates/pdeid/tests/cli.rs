//! Integration tests driving the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pdeid"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "exit {:?}\nstdout: {}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn unknown_experiment_fails_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["simulate", "--experiment", "nope", "--out", "x.gf"], dir.path());
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nope"), "stderr: {err}");
}

#[test]
fn corrupt_is_deterministic_for_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["simulate", "--experiment", "transport", "--out", "clean.gf"], dir.path()));
    for out_name in ["a.gf", "b.gf"] {
        assert_ok(&run(
            &["corrupt", "--in", "clean.gf", "--noise", "10", "--seed", "7", "--out", out_name],
            dir.path(),
        ));
    }
    let a = fs::read(dir.path().join("a.gf")).unwrap();
    let b = fs::read(dir.path().join("b.gf")).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, fs::read(dir.path().join("clean.gf")).unwrap());
}

#[test]
fn identify_prints_the_pde_last_and_evaluate_scores_it() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["simulate", "--experiment", "transport", "--out", "clean.gf"], dir.path()));
    let out = run(
        &["identify", "--in", "clean.gf", "--method", "sc", "--alpha", "0.005", "--out", "report.json"],
        dir.path(),
    );
    assert_ok(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let last = stdout.lines().last().unwrap();
    assert!(last.starts_with("u_t = "), "last line: {last}");
    assert!(last.contains("u_x"), "last line: {last}");

    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["method"], "sc");
    assert!(report["support_names"].as_array().unwrap().iter().any(|v| v == "u_x"));

    let out = run(
        &["evaluate", "--report", "report.json", "--in", "clean.gf", "--truth", "transport"],
        dir.path(),
    );
    assert_ok(&out);
    let eval: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(eval["support_exact"], true);
    assert!(eval["coefficient_error"].as_f64().unwrap() < 5e-3);
}

#[test]
fn flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("run.cfg"),
        "# defaults for this run\nexperiment = twod-transport-x\nout = from_cfg.gf\n",
    )
    .unwrap();
    // Config alone: a 2D experiment.
    assert_ok(&run(&["simulate", "--config", "run.cfg"], dir.path()));
    let header = fs::read_to_string(dir.path().join("from_cfg.gf")).unwrap();
    assert!(header.lines().next().unwrap().contains("\"d\":2"));
    // Flag overrides the experiment, config still provides the output path.
    assert_ok(&run(
        &["simulate", "--config", "run.cfg", "--experiment", "transport"],
        dir.path(),
    ));
    let header = fs::read_to_string(dir.path().join("from_cfg.gf")).unwrap();
    assert!(header.lines().next().unwrap().contains("\"d\":1"));
}

#[test]
fn smooth_preserves_the_grid() {
    let dir = tempfile::tempdir().unwrap();
    assert_ok(&run(&["simulate", "--experiment", "transport", "--out", "clean.gf"], dir.path()));
    assert_ok(&run(
        &["corrupt", "--in", "clean.gf", "--noise", "5", "--seed", "1", "--out", "noisy.gf"],
        dir.path(),
    ));
    assert_ok(&run(&["smooth", "--in", "noisy.gf", "--h", "0.04", "--out", "s.gf"], dir.path()));
    let orig = fs::read_to_string(dir.path().join("noisy.gf")).unwrap();
    let smoothed = fs::read_to_string(dir.path().join("s.gf")).unwrap();
    assert_eq!(orig.lines().next(), smoothed.lines().next());
    assert_ne!(orig, smoothed);
}

#[test]
fn benchmark_quick_suite_writes_the_documented_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["benchmark", "--suite", "quick", "--repeats", "1", "--out-csv", "bench.csv", "--out-json", "bench.json"],
        dir.path(),
    );
    assert_ok(&out);
    let csv = fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "experiment,method,noise_pct,repeats,mean_ec,std_ec,mean_er,std_er,support_hit_rate,wall_ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4); // transport x {0,10}% x {st,sc}
    assert!(rows.iter().all(|r| r.starts_with("transport,")));
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("bench.json")).unwrap()).unwrap();
    assert_eq!(summary.as_array().unwrap().len(), 4);
}
