use std::process::Command;

fn conex(args: &[&str], out_dir: &std::path::Path) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_conex"))
        .args(args)
        .env("CONEX_OUT_DIR", out_dir)
        .output()
        .expect("binary runs");
    (o.status.code().unwrap(), String::from_utf8_lossy(&o.stdout).into(), String::from_utf8_lossy(&o.stderr).into())
}

#[test]
fn verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = conex(&["verify", "--chart", "r4", "--degree", "6", "--seed", "7"], dir.path());
    assert_eq!(code, 0, "{out}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("verify.json")).unwrap()).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["config"]["seed"], 7);
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn homology_ranks() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = conex(&["homology", "--chart", "r2", "--trunc", "8", "--operator", "delta"], dir.path());
    assert_eq!(code, 0);
    assert!(out.contains("[0, 0, 1]"), "{out}");
}

#[test]
fn membership_query_is_answered() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = conex(&["membership", "--theta", "0", "--term", "1:0:1"], dir.path());
    assert_eq!(code, 0);
    assert!(out.contains("not smooth"), "{out}");
    let (code, out, _) = conex(&["membership", "--theta", "1/2", "--term", "1:0:1"], dir.path());
    assert_eq!(code, 0);
    assert!(out.contains("is smooth"), "{out}");
}

#[test]
fn invalid_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["membership", "--theta", "0", "--term", "-1:0:1"][..],
        &["homology", "--chart", "r3"],
        &["bump-check", "--tol", "-1"],
        &["flatness"],
        &["nonsense"],
    ] {
        let (code, _, err) = conex(args, dir.path());
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn failed_check_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    // a tolerance below rounding error makes the partition check fail
    let (code, out, _) = conex(&["bump-check", "--samples", "1000", "--tol", "1e-300"], dir.path());
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[FAIL] partition-sums-to-one  witness:"), "{out}");
}

#[test]
fn reports_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["cone-report", "--link", "flat-pairs:2", "--nash-samples", "5", "--seed", "3"];
    assert_eq!(conex(&args, a.path()).0, 0);
    assert_eq!(conex(&args, b.path()).0, 0);
    let read = |d: &tempfile::TempDir| std::fs::read(d.path().join("cone-report.json")).unwrap();
    assert_eq!(read(&a), read(&b));
    assert!(!String::from_utf8(read(&a)).unwrap().contains("timing_ms"));
}

#[test]
fn explicit_output_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let (code, _, _) = conex(&["flatness", "--pairs", "2", "--timing", "-o", path.to_str().unwrap()], dir.path());
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["result"]["degree"], 4);
    assert!(json["timing_ms"].is_u64());
}
