use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qcenter(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcenter"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache)
        .env_remove("QCENTER_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "exit {:?}: {}",
        o.status.code(),
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn grassmannian_diamond_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &["diamond", "--type", "A", "--rank", "3", "--levi", "1,3"],
    ));
    assert!(out.contains("| j+i=4 | 2 | 2 | 1 |  |  |"), "{out}");
    assert!(out.trim_end().ends_with("total: 20"), "{out}");
}

#[test]
fn per_weight_shows_nontrivial_isotype() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &["diamond", "--type", "B", "--rank", "2", "--per-weight"],
    ));
    assert!(out.contains("3·L₀ + 1·L[1,0]"), "{out}");
    assert!(out.contains("(Borel)"));
}

#[test]
fn json_round_trip_and_cache_hit() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["diamond", "--type", "A", "--rank", "2", "--format", "json"];
    let cold = stdout(&qcenter(dir.path(), &args));
    assert!(dir.path().join("A2_borel.json").exists());
    let warm = stdout(&qcenter(dir.path(), &args));
    assert_eq!(cold, warm);
    let d = qcenter::HodgeDiamond::from_json(&cold).unwrap();
    assert_eq!(d.total, 16);
    assert_eq!(d.dim_x, 3);
    let nocache = tempfile::tempdir().unwrap();
    let fresh = stdout(&qcenter(
        nocache.path(),
        &[
            "--no-cache",
            "diamond",
            "--type",
            "A",
            "--rank",
            "2",
            "--format",
            "json",
        ],
    ));
    assert_eq!(cold, fresh);
    assert!(std::fs::read_dir(nocache.path()).unwrap().next().is_none());
}

#[test]
fn corrupt_cache_is_recomputed_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("A2_1.json"), "{not json").unwrap();
    let o = qcenter(
        dir.path(),
        &["diamond", "--type", "A", "--rank", "2", "--levi", "1"],
    );
    let out = stdout(&o);
    assert!(out.contains("total: 6"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    // and the file is repaired
    let warm = qcenter(
        dir.path(),
        &["diamond", "--type", "A", "--rank", "2", "--levi", "1"],
    );
    assert!(warm.stderr.is_empty());
    assert_eq!(stdout(&warm), out);
}

#[test]
fn csv_diamond() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &["diamond", "--type", "A", "--rank", "1", "--format", "csv"],
    ));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("i,j,degree,dim,isotypes"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn census_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &[
            "census", "--type", "A", "--rank", "2", "--l", "5", "--format", "json",
        ],
    ));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["restricted_weights"], 25);
    let regular = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["label"] == "regular")
        .unwrap();
    assert_eq!(regular["count"], 2);
}

#[test]
fn center_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &["center-dim", "--type", "A", "--rank", "3", "--l", "7"],
    ));
    assert!(out.contains("= 1496"), "{out}");
    assert!(out.contains("rational Catalan: 1496"));
    let json = stdout(&qcenter(
        dir.path(),
        &[
            "center-dim",
            "--type",
            "A",
            "--rank",
            "1",
            "--l",
            "5",
            "--format",
            "json",
        ],
    ));
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["total"], 7);
}

#[test]
fn cached_only_reports_missing_diamond() {
    let dir = tempfile::tempdir().unwrap();
    let o = qcenter(
        dir.path(),
        &[
            "center-dim",
            "--type",
            "A",
            "--rank",
            "2",
            "--l",
            "5",
            "--cached-only",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hint"));
}

#[test]
fn bwb_forms() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &[
            "bwb", "--n", "4", "--k", "2", "--q", "2,0", "--dual-q", "--s", "1,1", "--format", "json",
        ],
    ));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["shifted"], serde_json::json!([4, 1, 3, 2]));
    let out = stdout(&qcenter(
        dir.path(),
        &["bwb", "--n", "4", "--k", "2", "--q", "0,-2", "--s", "2,0"],
    ));
    assert!(out.contains("repeated entry"));
    let out = stdout(&qcenter(
        dir.path(),
        &["bwb", "--type", "A", "--rank", "1", "--weight", "-2"],
    ));
    assert!(out.starts_with("H^1 = L[0]"), "{out}");
}

#[test]
fn bgg_dump_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&qcenter(
        dir.path(),
        &[
            "bgg-dump", "--type", "A", "--rank", "3", "--levi", "1,3", "--j", "3", "--r", "-4", "--nu",
            "0,0,0",
        ],
    ));
    let v: Value = serde_json::from_str(&out).unwrap();
    let h = v["cohomology"].as_array().unwrap();
    assert_eq!(h.len(), 7);
    assert_eq!(h[0], 0);
    assert_eq!(h[1], 2);
    assert!(v["complex"].is_object());
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["diamond", "--type", "Q", "--rank", "2"][..],
        &["diamond", "--type", "A"],
        &["diamond", "--type", "A", "--rank", "2", "--levi", "7"],
        &["census", "--type", "A", "--rank", "2", "--l", "1"],
        &["bwb", "--n", "4"],
        &["frobnicate"],
    ] {
        let o = qcenter(dir.path(), args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(qcenter(dir.path(), &["--help"]).status.code(), Some(0));
}
