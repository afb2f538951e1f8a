use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn rankzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankzeta"))
        .args(args)
        .env_remove("RANKZETA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = rankzeta(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn invariants_of_c1() {
    let c1 = fixture("c1");
    let p = json(&["invariants", "--code", &c1, "--i", "2"]);
    assert_eq!(strings(&p["A"]), ["0", "0", "13", "638"]);
    let table = stdout(&rankzeta(&["invariants", "--code", &c1, "--i", "2", "--format", "table"]));
    assert!(table.contains("W    13XY^2 + 638Y^3"), "{table}");
    let p0 = json(&["invariants", "--code", &c1, "--i", "0"]);
    assert_eq!(strings(&p0["B"]), ["1", "7", "7", "1"]);
    let all = json(&["invariants", "--code", &c1, "--all-i"]);
    assert_eq!(all.as_array().unwrap().len(), 7);
}

#[test]
fn zeta_and_beta() {
    let z = json(&["zeta", "--code", &fixture("c1"), "--i", "3", "--tau", "1", "--beta"]);
    assert_eq!(z["beta"]["values"][0], "1/1085");
    assert_eq!(strings(&z["Z"])[..2], ["1/7", "1395"]);
    let zero = json(&["zeta", "--code", &fixture("zero_3x4"), "--i", "0"]);
    assert!(strings(&zero["Z"]).iter().all(|c| c == "1"));
    let p = json(&["zeta", "--code", &fixture("c1"), "--i", "2"]);
    let bound = p["degree_bound"].as_i64().unwrap() as usize;
    assert_eq!(p["P"].as_array().unwrap().len(), bound + 1);
}

#[test]
fn reference_and_phi() {
    let out = stdout(&rankzeta(&["reference", "--i", "3", "--n", "3", "--m", "4"]));
    assert!(out.contains("Z        155, 788035, 3269560515, 13402854502595,"), "{out}");
    assert!(out.contains("M_2      1085XY^2 + 786950Y^3"));
    assert!(out.contains("phi T^3  X^3 - 7X^2Y + 14XY^2 - 8Y^3"));
}

#[test]
fn classification() {
    let c1 = json(&["classify", "--code", &fixture("c1")]);
    assert_eq!(c1["minimal_bmd"], 4);
    let c4 = json(&["classify", "--code", &fixture("c4"), "--dual"]);
    assert_eq!(c4["dual"]["minimal_bmd"], 2);
    assert_eq!(c4["wei_duality"], true);
    let c3 = json(&["classify", "--code", &fixture("c3")]);
    assert_eq!(c3["bmd"][1], true);
}

#[test]
fn oracle_check_passes_and_detects_corruption() {
    let c1 = fixture("c1");
    let ok = rankzeta(&["oracle-check", "--code", &c1]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(!stdout(&ok).contains("FAIL"));

    let random = rankzeta(&["oracle-check", "--random", "n=3 m=3 k=4 q=2 seed=7"]);
    assert_eq!(random.status.code(), Some(0), "{}", stdout(&random));
    assert!(stdout(&random).contains("0 fail, 0 skip"));

    let mut profile = json(&["invariants", "--code", &c1, "--i", "2"]);
    profile["A"][3] = Value::from("639");
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{profile}").unwrap();
    let path = file.path().to_string_lossy().into_owned();
    let bad = rankzeta(&["oracle-check", "--code", &c1, "--profile", &path]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(stdout(&bad).contains("violated: A is the inversion of B"), "{}", stdout(&bad));
}

#[test]
fn budget_turns_checks_into_skips() {
    let out = Command::new(env!("CARGO_BIN_EXE_rankzeta"))
        .args(["oracle-check", "--code", &fixture("c1")])
        .env("RANKZETA_BUDGET", "40")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("SKIP"));
    let tight = rankzeta(&["--budget", "3", "invariants", "--code", &fixture("c1"), "--i", "1"]);
    assert_eq!(tight.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&tight.stderr).contains("budget exceeded"));
}

#[test]
fn fixtures_listing() {
    let list = stdout(&rankzeta(&["fixtures"]));
    assert_eq!(list.lines().count(), 8);
    let c1: Value = serde_json::from_str(&stdout(&rankzeta(&["fixtures", "c1"]))).unwrap();
    assert_eq!(c1["generators"].as_array().unwrap().len(), 6);
}

#[test]
fn hamming_report() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"q": 3, "n": 4, "generators": [[1, 0, 1, 1], [0, 1, 1, 2]]}}"#).unwrap();
    let path = file.path().to_string_lossy().into_owned();
    let r = json(&["hamming", "--code", &path]);
    assert_eq!(r["weights"], serde_json::json!([0, 3, 4]));
    assert_eq!(r["bmd_iff_mds"], true);
}

#[test]
fn errors_and_exit_codes() {
    assert_eq!(rankzeta(&["invariants", "--code", &fixture("c1")]).status.code(), Some(1));
    assert_eq!(rankzeta(&["bogus"]).status.code(), Some(1));
    assert_eq!(rankzeta(&["--help"]).status.code(), Some(0));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"q": 2, "n": 2, "m": 2, "generators": [[[1, 0], [0]]]}}"#).unwrap();
    let path = file.path().to_string_lossy().into_owned();
    let out = rankzeta(&["classify", "--code", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generator 0 row 1"));
}

#[test]
fn output_is_byte_stable() {
    let args = ["invariants", "--code", "c2", "--all-i", "--format", "table"];
    assert_eq!(rankzeta(&args).stdout, rankzeta(&args).stdout);
    let args = ["oracle-check", "--code", "c5"];
    assert_eq!(rankzeta(&args).stdout, rankzeta(&args).stdout);
}

#[test]
fn oracle_check_on_every_fixture() {
    let start = std::time::Instant::now();
    for name in stdout(&rankzeta(&["fixtures"])).lines() {
        let out = rankzeta(&["oracle-check", "--code", &fixture(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}\n{}", stdout(&out));
        assert!(stdout(&out).contains(" 0 fail, 0 skip"), "{name}\n{}", stdout(&out));
    }
    assert!(start.elapsed() < std::time::Duration::from_secs(300));
}

#[test]
fn dual_moments_feed_macwilliams() {
    let all = json(&["invariants", "--code", "c1", "--dual", "--all-i"]);
    let at_one: Vec<String> = (0..3).map(|j| all[j]["B"][1].as_str().unwrap().to_string()).collect();
    assert_eq!(at_one, ["7", "1", "0"]);
}
