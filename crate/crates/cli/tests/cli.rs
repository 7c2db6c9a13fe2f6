use std::path::Path;
use std::process::{Command, Output};

fn quadwaring(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadwaring"))
        .args(args)
        .current_dir(cwd)
        .env_remove("QUADWARING_OUT_DIR")
        .output()
        .expect("spawn quadwaring")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadwaring(&["generate", "--n", "5", "--s", "3", "-o", "c.json"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("size 45"));
    let v = quadwaring(&["verify", "c.json"], dir.path());
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    let v = quadwaring(&["verify", "--numeric", "c.json"], dir.path());
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    assert!(quadwaring(&["generate", "--n", "4", "--s", "2", "-o", "c.json"], dir.path()).status.success());
    let path = dir.path().join("c.json");
    let mut cert: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let w = &mut cert["terms"][0]["weight"];
    let bumped = format!("{}1", w.as_str().unwrap());
    *w = serde_json::Value::String(bumped);
    std::fs::write(&path, serde_json::to_vec_pretty(&cert).unwrap()).unwrap();
    let v = quadwaring(&["verify", "c.json"], dir.path());
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("mismatch"), "{}", stdout(&v));
}

#[test]
fn malformed_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.json"), "{\"version\": 1,\n \"n\": }").unwrap();
    let v = quadwaring(&["verify", "bad.json"], dir.path());
    assert_eq!(v.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&v.stderr).contains("line 2"));
}

#[test]
fn bounds_reports_subgeneric() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadwaring(&["bounds", "--n", "12", "--s", "3", "--format", "json"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["subgeneric"], true);
    assert_eq!(v["upper11"], "1024");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(quadwaring(&["generate", "--n", "0", "--s", "2"], dir.path()).status.code(), Some(2));
    assert_eq!(quadwaring(&["bogus"], dir.path()).status.code(), Some(2));
    assert_eq!(quadwaring(&["builtin", "nope", "--n", "3"], dir.path()).status.code(), Some(2));
    assert_eq!(quadwaring(&["closed-form", "--s", "9"], dir.path()).status.code(), Some(2));
    assert_eq!(quadwaring(&["builtin", "q8s2", "--n", "7"], dir.path()).status.code(), Some(2));
}

#[test]
fn table_csv_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadwaring(&["table", "--n-max", "5", "--s-min", "2", "--s-max", "3"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,s,lower,upper11,upper42,generic_exact_num,generic_exact_den,subgeneric"));
    assert_eq!(lines.count(), 10);
}

#[test]
fn generation_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["a.json", "b.json"] {
        assert!(quadwaring(&["generate", "--n", "6", "--s", "3", "--seed", "7", "-o", f], dir.path()).status.success());
    }
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("certs");
    let out = Command::new(env!("CARGO_BIN_EXE_quadwaring"))
        .args(["generate", "--n", "3", "--s", "2"])
        .current_dir(dir.path())
        .env("QUADWARING_OUT_DIR", &target)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(target.join("q3s2-seed0.json").is_file());
}

#[test]
fn builtin_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    assert!(quadwaring(&["builtin", "s4-gaussian", "--n", "5", "-o", "g.json"], dir.path()).status.success());
    assert_eq!(quadwaring(&["verify", "g.json"], dir.path()).status.code(), Some(0));
}

#[test]
fn check_paper_single_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadwaring(&["check-paper", "--criterion", "12"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn stdout_certificate_is_pure_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadwaring(&["generate", "--n", "3", "--s", "2", "-o", "-"], dir.path());
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["meta"]["size"], 9);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size 9"));
}
