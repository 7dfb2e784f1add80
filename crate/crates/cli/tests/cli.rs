use std::path::{Path, PathBuf};
use std::process::Command;

use euler_trace_cli::cli::{default_data_dir, selftest};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    default_data_dir().join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_euler-trace"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}{stderr}"));
    (code, v)
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn group_s3_has_three_classes() {
    let (code, v) = run_json(&["group", &path("s3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["num_classes"], 3);
    assert_eq!(v["status"], "pass");
}

#[test]
fn z12_classes_are_singletons() {
    let (_, v) = run_json(&["group", &path("z12.json")]);
    let classes = v["results"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 12);
    assert!(classes.iter().all(|c| c["size"] == 1));
}

#[test]
fn bad_table_is_an_error() {
    let (code, stdout, stderr) = run(&["group", &path("bad_table.json")]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("not a group"), "{stderr}");
}

#[test]
fn hs_values() {
    let values = |file: &str| -> Vec<String> {
        let (_, v) = run_json(&["hs", &path(file)]);
        v["results"]["hs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["value"].as_str().unwrap().to_string())
            .collect()
    };
    assert_eq!(values("e_s3.json"), ["1/6", "1/2", "1/3"]);
    assert_eq!(values("identity2_s3.json"), ["2/1", "0/1", "0/1"]);
}

#[test]
fn restriction_to_z2_doubles() {
    let (code, v) = run_json(&["hs", &path("half_z4.json"), "--restrict", "0,2"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["justification"] == "restriction-index"));
}

#[test]
fn graph_models() {
    for (file, e) in [
        ("sl2z.json", "-1/12"),
        ("psl2z.json", "-1/6"),
        ("d_infinity.json", "0/1"),
    ] {
        let (code, v) = run_json(&["graph", &path(file), "--verify"]);
        assert_eq!(code, 0, "{file}");
        assert_eq!(v["results"]["euler_characteristic"], e, "{file}");
        assert_eq!(v["results"]["class_sum"], "1/1", "{file}");
    }
}

#[test]
fn expressions() {
    let (_, v) = run_json(&["expr", &path("free_product_family.json")]);
    assert_eq!(v["results"]["chi2"], "2/1");
    let (_, v) = run_json(&["expr", &path("cross_z.json")]);
    assert_eq!(v["results"]["chi2"], "0/1");
    let (code, v) = run_json(&["expr", &path("product.json")]);
    assert_eq!(code, 0);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["justification"] == "product-multiplicativity" && c["equal"] == true));
    let (_, v) = run_json(&["expr", &path("not_fp.json")]);
    assert!(v["results"]["e"].as_str().unwrap().starts_with("undefined"));
}

#[test]
fn construct_rho_values() {
    for rho in ["3/7", "0", "-22/5"] {
        let (code, v) = run_json(&["construct-rho", rho]);
        assert_eq!(code, 0, "{rho}");
        let want = if rho.contains('/') { rho.to_string() } else { format!("{rho}/1") };
        assert_eq!(v["results"]["complete_euler"], want.as_str());
        assert_eq!(v["results"]["chi2_centralizer"], want.as_str());
    }
}

#[test]
fn malformed_rho_is_an_error() {
    let (code, _, stderr) = run(&["construct-rho", "1/0"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["graph", &path("sl2z.json"), "--verify"]);
    let b = run(&["graph", &path("sl2z.json"), "--verify"]);
    assert_eq!(a, b);
}

fn copy_goldens(to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for entry in std::fs::read_dir(data("golden")).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), to.join(entry.file_name())).unwrap();
    }
}

#[test]
fn goldens_match() {
    let r = selftest(Some("golden-never-matches-a-criterion"), 1, &default_data_dir(), &data("golden"), false)
        .unwrap();
    assert!(r.checks.is_empty());
    let r = selftest(Some("graph"), 1, &default_data_dir(), &data("golden"), false).unwrap();
    assert!(r.passed());
    // criteria 5 to 7 plus the four graph goldens
    assert!(r.checks.iter().any(|c| c.name.starts_with("[graph-sl2z]")));
    assert_eq!(r.checks.iter().filter(|c| c.name.starts_with("[golden]")).count(), 4);
    assert!(!r.checks.iter().any(|c| c.name.starts_with("[sum-rule]")));
}

#[test]
fn corrupted_golden_is_a_named_failure() {
    let dir = std::env::temp_dir().join(format!("euler-trace-golden-{}", std::process::id()));
    copy_goldens(&dir);
    std::fs::write(dir.join("graph_psl2z.json"), "{}\n").unwrap();
    let golden_dir = dir.to_string_lossy().into_owned();
    let (code, v) = run_json(&["selftest", "--filter", "psl2z", "--golden-dir", &golden_dir]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, 1);
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["equal"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["[golden] graph-psl2z"]);
}

#[test]
fn table_mode_is_text() {
    let (code, stdout, _) = run(&["--table", "construct-rho", "5/2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("command: construct-rho 5/2"));
    assert!(stdout.trim_end().ends_with("status: pass"));
}
