use std::process::{Command, Output};

use ginv_core::harness::VerificationReport;

fn ginv(cache: &std::path::Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ginv"))
        .env("GINV_CACHE_DIR", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn invariant_values() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        let o = ginv(dir.path(), args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        stdout(&o).trim().to_string()
    };
    assert_eq!(run(&["invariant", "--kind", "q", "--genus", "2", "family:A(5)"]), "4769/216000");
    assert_eq!(run(&["invariant", "--kind", "qtilde", "--genus", "2", "family:A(4)"]), "11/72");
    assert_eq!(run(&["invariant", "--kind", "Q", "--genus", "1", "S(3)"]), "3/1");
    assert_eq!(run(&["invariant", "--kind", "d", "A(5)"]), "1/12");
    assert_eq!(run(&["invariant", "--kind", "dpprime", "--prime", "5", "PSL2(5)"]), "1/4");
    assert_eq!(run(&["tqft", "--genus", "2", "S(3)"]), "81/1");
    assert_eq!(run(&["tqft", "--word", "cap,cup", "C(2)"]), "1/2");
    assert_eq!(run(&["tqft", "--word", "cap,copants,cylinder,pants,cup", "S(3)"]), "3/1");
}

#[test]
fn brauer_file_enables_higher_genus() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a5.brauer");
    std::fs::write(&file, "GINVBRAUER 1\nA(5)\n5\n1:1 2:2 4:1\n").unwrap();
    let args = ["invariant", "--kind", "qhpprime", "--genus", "2", "--prime", "5", "A(5)"];
    assert_eq!(ginv(dir.path(), &args).status.code(), Some(3));
    let mut with_file = args.to_vec();
    with_file.extend(["--brauer", file.to_str().unwrap()]);
    let o = ginv(dir.path(), &with_file);
    assert_eq!(stdout(&o).trim(), "25/192");
    let mut json_args = vec!["--format", "json"];
    json_args.extend(with_file);
    let v: serde_json::Value = serde_json::from_str(&stdout(&ginv(dir.path(), &json_args))).unwrap();
    assert_eq!(v["value"], "25/192");
    // α(2,5)/4 = (1/4 + 2/4)/4 = 3/16 > 25/192
    assert_eq!(v["exceeds_alpha_threshold"], false);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| ginv(dir.path(), args).status.code();
    assert_eq!(code(&["degrees", "bogus(3)"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["invariant", "--kind", "z", "A(4)"]), Some(2));
    assert_eq!(code(&["invariant", "--kind", "dpprime", "A(4)"]), Some(2));
    assert_eq!(code(&["tqft", "--word", "cap,pants,cup", "A(4)"]), Some(2));
    assert_eq!(code(&["tqft", "--word", "cap", "A(4)"]), Some(2));
    assert_eq!(code(&["explore", "--normal", "(1 4)", "S(3)"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "theorems", "--groups", "C(2),S(3)"]), Some(0));
    assert_eq!(
        code(&["verify", "--suite", "theorems", "--groups", "S(3),A(4)", "--perturb-threshold", "1.1c"]),
        Some(1)
    );
    assert_eq!(
        code(&["verify", "--suite", "theorems", "--groups", "frobenius_mersenne(3)", "--perturb-threshold", "1.2:99/100"]),
        Some(1)
    );
    assert_eq!(code(&["verify", "--suite", "theorems", "--groups", "nothing"]), Some(2));
}

#[test]
fn json_report_roundtrips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let o = ginv(
        dir.path(),
        &["--format", "json", "verify", "--suite", "theorems", "--max-genus", "2", "--groups", "S(3),D(8),A(4)", "--timestamp", "2026-01-01T00:00:00Z"],
    );
    let text = stdout(&o);
    let report = VerificationReport::from_json(&text).unwrap();
    assert_eq!(report.to_json(), text);
    assert_eq!(report.suite, "theorems");
    assert!(report.summary.extremal > 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let row = &v["results"][0];
    for key in ["theorem", "group", "h", "lhs", "rhs", "hypothesis", "conclusion", "verdict"] {
        assert!(row.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn groups_file_and_cache_admin() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("groups.txt");
    std::fs::write(&list, "# two small groups\nfamily:S(4)\ngens:4:(1 2 3 4),(1 2)\n").unwrap();
    let cache = dir.path().join("cache");
    let o = ginv(&cache, &["verify", "--suite", "lemmas", "--groups-file", list.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // both entries describe S4 with identical generators: one fingerprint
    let stats = stdout(&ginv(&cache, &["--format", "json", "cache", "stats"]));
    let v: serde_json::Value = serde_json::from_str(&stats).unwrap();
    assert_eq!(v["entries"], 1);
    let again = ginv(&cache, &["--format", "json", "degrees", "S(4)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(v["source"], "cache");
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2, 3, 3]));
    let cleared = stdout(&ginv(&cache, &["cache", "clear"]));
    assert!(cleared.starts_with("removed 1 entries"));
}

#[test]
fn explore_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let o = ginv(dir.path(), &["--format", "json", "explore", "--normal", "(1 2 3)", "S(3)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_order"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["inequality_holds"] == true));

    let o = ginv(dir.path(), &["--format", "json", "classify", "frobenius_mersenne(3)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["solvable"], true);
    assert_eq!(v["p_closed"]["7"], false);
    assert_eq!(v["p_closed"]["2"], true);

    let o = ginv(dir.path(), &["classes", "extraspecial+(59)"]);
    assert!(stdout(&o).starts_with("3539 classes, |G| = 205379"));
}
