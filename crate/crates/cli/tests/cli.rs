use reductionlab_cli::{registry, verify, Context, FieldFactory, SEED_ENV};
use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_reductionlab"));
    c.env_remove(SEED_ENV);
    c
}

fn run(args: &[&str], out: &Path) -> Output {
    bin().args(args).arg("--out").arg(out).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_shows_every_scenario_in_order() {
    let o = bin().arg("list").output().unwrap();
    assert!(o.status.success());
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    let expected: Vec<&str> = registry().iter().map(|s| s.name).collect();
    assert_eq!(names, expected);
}

#[test]
fn calogero_csv_header_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["run", "calogero"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(dir.path().join("calogero.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "t,q1,q2,p1,p2,l_drift");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("calogero.json")).unwrap()).unwrap();
    assert_eq!(report["scenario"], "calogero");
    assert_eq!(report["seed"], 42);
    assert_eq!(report["checks"].as_array().unwrap().len(), 2);
    assert!(stdout(&o).contains("PASS calogero-eigenvalue-match"));
}

#[test]
fn riccati_accepts_matrix_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["run", "riccati", "--param", "A=[[0,1],[-1,0]]", "--param", "t_end=0.5"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("riccati.json")).unwrap()).unwrap();
    assert_eq!(report["parameters"]["A"], "[[0.0,1.0],[-1.0,0.0]]");
    assert_eq!(report["parameters"]["t_end"], "0.5");

    let o = run(&["run", "riccati", "--param", "A=[[1,2],[3,4]]"], dir.path());
    assert!(o.status.success());
}

#[test]
fn reruns_are_byte_identical_and_seed_dependent() {
    let (a, b, c) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        assert!(run(&["run", "radial", "--param", "samples=5"], d.path()).status.success());
    }
    let o = bin()
        .env(SEED_ENV, "7")
        .args(["run", "radial", "--param", "samples=5", "--out"])
        .arg(c.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let read = |d: &tempfile::TempDir| std::fs::read(d.path().join("radial.csv")).unwrap();
    assert_eq!(read(&a), read(&b));
    assert_ne!(read(&a), read(&c));
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = run(&["run", "foo"], dir.path());
    assert_eq!(unknown.status.code(), Some(2));
    let bad_key = run(&["run", "calogero", "--param", "nope=1"], dir.path());
    assert_eq!(bad_key.status.code(), Some(2));
    let bad_value = run(&["run", "calogero", "--param", "dt=abc"], dir.path());
    assert_eq!(bad_value.status.code(), Some(2));
    let no_eq = run(&["run", "calogero", "--param", "dt"], dir.path());
    assert_eq!(no_eq.status.code(), Some(2));
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());

    let bad_seed = bin().env(SEED_ENV, "minus one").args(["verify", "--filter", "sl2"]).output().unwrap();
    assert_eq!(bad_seed.status.code(), Some(2));
    let no_match = bin().args(["verify", "--filter", "zzz"]).output().unwrap();
    assert_eq!(no_match.status.code(), Some(2));
}

#[test]
fn failing_check_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"scenario":"monopole","parameters":{"t_end":1},"tolerances":{"monopole-j-drift":-1}}"#).unwrap();
    let o = bin().args(["run", "monopole", "--config"]).arg(&cfg).arg("--out").arg(dir.path()).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL monopole-j-drift"));
    assert!(dir.path().join("monopole.csv").exists());

    std::fs::write(&cfg, r#"{"scenario":"monopole","tolerances":{"no-such-check":1}}"#).unwrap();
    let o = bin().args(["run", "monopole", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    std::fs::write(&cfg, r#"{"scenario":"monopole","unexpected":true}"#).unwrap();
    let o = bin().args(["run", "monopole", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_filter_by_module() {
    let o = bin().args(["verify", "--filter", "quantum"]).output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("quantum-pictures") && text.contains("kahler-geometry"));
    assert!(!text.contains("calogero"));
    assert!(text.contains("all checks passed"));
}

#[test]
fn injected_sign_error_is_named() {
    let flipped: FieldFactory = Arc::new(|l| {
        let f = reductionlab::classical::calogero_field(l);
        Box::new(move |t, y, dy| {
            f(t, y, dy)?;
            dy[2] = -dy[2];
            dy[3] = -dy[3];
            Ok(())
        })
    });
    let report = verify(Some("calogero"), &Context::default().with_calogero_field(flipped)).unwrap();
    assert!(!report.passed());
    assert!(report.failures().contains(&"calogero-eigenvalue-match".to_string()));
    assert!(report.render().contains("FAIL"));

    let clean = verify(Some("calogero"), &Context::default()).unwrap();
    assert!(clean.passed());
}
