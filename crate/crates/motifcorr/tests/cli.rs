use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_motifcorr"));
    c.env_remove("MOTIFCORR_THREADS");
    c
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/coauthors.txt")
}

fn run(args: &[&str], out: &Path) -> Output {
    bin().args(args).arg("--out").arg(out).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn enumerate_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["enumerate", "3", "2"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("size 2\n"));
    let o = run(&["enumerate", "4", "3"], dir.path());
    assert!(stdout(&o).contains("size 4\n"));
    let text = std::fs::read_to_string(dir.path().join("motifs.txt")).unwrap();
    assert!(text.starts_with("# family: bounded n_e=4 d=3\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn enumerate_special_prints_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["enumerate", "--special", "1", "3"], dir.path());
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("size 1\n"));
    let line = s.lines().find(|l| l.starts_with("bounds [")).unwrap();
    assert!(line.ends_with(", 1]"), "{line}");
    let summary = json(&dir.path().join("summary.json"));
    let lo = summary["size_bounds"][0].as_f64().unwrap();
    assert!((lo - 0.5 * 6.0 / (std::f64::consts::E * 54.0)).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["enumerate"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["simulate", "--nope"], dir.path()).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], dir.path()).status.code(), Some(1));
}

#[test]
fn missing_config_names_path() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json");
    let o = bin()
        .args(["simulate", "--config"])
        .arg(&missing)
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("absent.json"));
}

#[test]
fn simulate_writes_outputs_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "simulate", "--n", "25", "--p", "0.2", "--rho", "0.9", "--family", "bounded:3:2",
        "--trials", "20", "--seed", "3",
    ];
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    assert!(run(&args, &a).status.success());
    let o = bin().args(args).arg("--out").arg(&b).arg("--threads").arg("1").output().unwrap();
    assert!(o.status.success());
    for f in ["scores.csv", "roc.csv", "histogram.csv", "summary.json"] {
        let x = std::fs::read(a.join(f)).unwrap();
        let y = std::fs::read(b.join(f)).unwrap();
        assert_eq!(x, y, "{f} differs between runs");
    }
    let s = json(&a.join("summary.json"));
    assert!(s["auc"].as_f64().unwrap() >= 0.0);
    assert_eq!(s["config"]["trials"], 20);
    assert_eq!(s["config_hash"].as_str().unwrap().len(), 64);
    let hist = std::fs::read_to_string(a.join("histogram.csv")).unwrap();
    assert!(hist.starts_with("bin_left,bin_right,count_h0,count_h1\n"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"n": 20, "p": 0.3, "rho": 0.5, "family": {"kind": "cycle", "k": 3}, "trials": 30}"#).unwrap();
    let o = bin()
        .args(["simulate", "--trials", "7", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = json(&dir.path().join("summary.json"));
    assert_eq!(s["config"]["trials"], 7);
    assert_eq!(s["config"]["n"], 20);
    assert_eq!(s["config"]["family"]["kind"], "cycle");
}

#[test]
fn roc_from_scores_matches_simulate() {
    let dir = tempfile::tempdir().unwrap();
    let sim = dir.path().join("sim");
    let o = run(
        &["simulate", "--n", "20", "--p", "0.3", "--family", "cycle:3", "--trials", "15"],
        &sim,
    );
    assert!(o.status.success());
    let roc = dir.path().join("roc");
    let scores = sim.join("scores.csv");
    let o = run(&["roc", "--scores", scores.to_str().unwrap()], &roc);
    assert!(o.status.success());
    assert_eq!(
        std::fs::read(sim.join("roc.csv")).unwrap(),
        std::fs::read(roc.join("roc.csv")).unwrap()
    );
    assert_eq!(json(&sim.join("summary.json"))["auc"], json(&roc.join("summary.json"))["auc"]);
}

#[test]
fn validate_theory_echo_and_scheme_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["validate", "--rho", "1", "--trials", "50"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let m = json(&dir.path().join("moments.json"));
    assert_eq!(m["moments"]["theory_mean_h1"], 2.0);
    let o = run(&["validate", "--scheme", "equal-edges"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("full_theoretical"));
}

#[test]
fn count_prints_counts_and_statistic() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.txt");
    std::fs::write(&g, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = run(
        &["count", "--graph", g.to_str().unwrap(), "--family", "cycle:3", "--centering", "none"],
        &dir.path().join("out"),
    );
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2.4e1"), "{}", stdout(&o));
    let f = fixture();
    let o = run(
        &["count", "--graph", f.to_str().unwrap(), "--second", f.to_str().unwrap(), "--family", "bounded:3:2"],
        &dir.path().join("out2"),
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("statistic "));
}

#[test]
fn realdata_fixture_rows() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture();
    let o = run(
        &[
            "realdata", f.to_str().unwrap(), "--top-k", "300", "--n", "40", "--overlaps", "0.8,0.99",
            "--family", "bounded:3:3", "--trials", "60",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = json(&dir.path().join("summary.json"));
    let rows = s["auc"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let a08 = rows[0]["auc"].as_f64().unwrap();
    let a099 = rows[1]["auc"].as_f64().unwrap();
    assert!(a099 >= a08 - 0.05, "{a08} {a099}");
    assert!(dir.path().join("roc_0_8.csv").exists());
    assert!(dir.path().join("roc_0_99.csv").exists());
}

#[test]
fn realdata_full_overlap_separates() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture();
    let o = run(
        &[
            "realdata", f.to_str().unwrap(), "--top-k", "300", "--n", "40", "--overlaps", "1",
            "--family", "bounded:3:3", "--trials", "60",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    let auc = json(&dir.path().join("summary.json"))["auc"][0]["auc"].as_f64().unwrap();
    assert!(auc > 0.95, "{auc}");
}

#[test]
fn realdata_k_too_large() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture();
    let o = run(&["realdata", f.to_str().unwrap(), "--top-k", "5000", "--n", "40"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_motifcorr"))
        .env("MOTIFCORR_THREADS", "many")
        .args(["enumerate", "3", "2", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
