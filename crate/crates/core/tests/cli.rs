use std::process::{Command, Output};

fn svt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svt")).args(args).env_remove("SVT_MAX_ORDER").output().expect("spawn svt")
}

fn stdout(args: &[&str]) -> String {
    let out = svt(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    svt(args).status.code().expect("exit code")
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--family", "straight", "--n", "4", "--t", "0", "--c", "0", "--d", "0", "--e", "2"]), "2\n");
    assert_eq!(stdout(&["count", "--family", "skew", "--n", "3", "--t", "1", "--f", "1"]), "6\n");
    assert_eq!(stdout(&["count", "--family", "straight", "--n", "3", "--t", "1", "--m", "3"]), "1\n");
    assert_eq!(stdout(&["count", "--family", "straight", "--n", "4", "--t", "0"]), "5\n");
}

#[test]
fn count_formats() {
    let csv = stdout(&["count", "--family", "skew", "--n", "3", "--t", "1", "--f", "1", "--format", "csv"]);
    assert_eq!(csv, "family,n,f,t,c,d,e,m,count\nskew,3,1,1,,,,,6\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "--family", "straight", "--n", "6", "--t", "2", "--format", "json"])).unwrap();
    assert_eq!(json["count"], 76);
    assert_eq!(json["family"], "straight");
}

#[test]
fn oracle_prints_match_only_on_agreement() {
    let out = stdout(&["count", "--family", "skew", "--n", "5", "--f", "2", "--t", "1", "--c", "2", "--d", "0", "--e", "2", "--oracle"]);
    assert!(out.ends_with("MATCH\n"), "{out}");
    let out = stdout(&["count", "--family", "straight", "--n", "6", "--t", "1", "--e", "2", "--oracle"]);
    assert!(out.ends_with("MATCH\n"), "{out}");
    let out = stdout(&["count", "--family", "straight", "--n", "5", "--t", "1", "--m", "3", "--oracle"]);
    assert!(out.ends_with("MATCH\n"), "{out}");
    // the documented n = 1 edge: formula 0, one tableau
    let out = svt(&["count", "--family", "straight", "--n", "1", "--t", "1", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("MISMATCH") && !text.contains("\nMATCH"), "{text}");
}

#[test]
fn contract_violations_exit_one() {
    // parameter sum
    assert_eq!(code(&["count", "--family", "straight", "--n", "3", "--t", "1", "--c", "0", "--d", "0", "--e", "2"]), 1);
    // no second-row cell for the denim entry
    assert_eq!(code(&["count", "--family", "straight", "--n", "2", "--t", "1", "--c", "0", "--d", "1", "--e", "0"]), 1);
    // skew without f, straight with f, m on skew
    assert_eq!(code(&["count", "--family", "skew", "--n", "3", "--t", "1"]), 1);
    assert_eq!(code(&["count", "--family", "straight", "--n", "3", "--t", "1", "--f", "2"]), 1);
    assert_eq!(code(&["count", "--family", "skew", "--n", "3", "--t", "1", "--f", "1", "--m", "2"]), 1);
    // row-refined count at n = 1
    assert_eq!(code(&["count", "--family", "straight", "--n", "1", "--t", "0", "--m", "1"]), 1);
    // unknown flag
    assert_eq!(code(&["count", "--bogus"]), 1);
    let out = svt(&["count", "--family", "straight", "--n", "3", "--t", "1", "--c", "0", "--d", "0", "--e", "2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("c + d + 2e + t"), "{err}");
}

#[test]
fn expected_examples() {
    assert_eq!(stdout(&["expected", "--n", "4", "--t", "0"]), "7/5\n");
    assert_eq!(stdout(&["expected", "--n", "3", "--t", "1"]), "2/3\n");
    assert_eq!(stdout(&["expected", "--n", "5", "--t", "5"]), "0/1\n");
    let out = svt(&["expected", "--n", "2", "--t", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("no tableaux for these parameters"));
    assert_eq!(code(&["expected", "--n", "1", "--t", "0"]), 1);
}

#[test]
fn series_examples() {
    assert_eq!(stdout(&["series", "--family", "straight", "--t", "0", "--order", "2"]), "0: 1\n1: 0\n2: alpha\n");
    assert!(stdout(&["series", "--family", "straight", "--t", "1", "--order", "1"]).ends_with("1: 1\n"));
    let all_one = ["series", "--family", "skew", "--f", "1", "--t", "1", "--order", "3", "--x", "1", "--y", "1", "--alpha", "1"];
    assert!(stdout(&all_one).ends_with("3: 6\n"));
    let rational = stdout(&["series", "--family", "straight", "--t", "0", "--order", "2", "--x", "1/2", "--y", "1", "--alpha", "3/4"]);
    assert_eq!(rational, "0: 1\n1: 0\n2: 3/4\n");
    let zero_y = stdout(&["series", "--family", "straight", "--t", "1", "--order", "4", "--x", "0", "--y", "0", "--alpha", "1"]);
    assert_eq!(zero_y, "0: 0\n1: 1\n2: 0\n3: 2\n4: 0\n");
}

#[test]
fn series_order_cap() {
    assert_eq!(code(&["series", "--family", "straight", "--t", "0", "--order", "25"]), 1);
    let capped = Command::new(env!("CARGO_BIN_EXE_svt"))
        .args(["series", "--family", "straight", "--t", "0", "--order", "3"])
        .env("SVT_MAX_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert_eq!(code(&["series", "--family", "straight", "--t", "0", "--order", "3", "--max-order", "2"]), 1);
    assert_eq!(code(&["series", "--family", "straight", "--t", "0", "--order", "2", "--x", "1/2"]), 1);
}

#[test]
fn table_examples() {
    let cor4 = stdout(&["table", "--which", "cor4", "--t", "0", "--n", "2..8"]);
    assert_eq!(cor4, "n,t,cor4\n2,0,1\n3,0,2\n4,0,5\n5,0,14\n6,0,42\n7,0,132\n8,0,429\n");
    let thm7 = stdout(&["table", "--which", "thm7", "--f", "1", "--t", "1", "--n", "2..6", "--format", "csv"]);
    let lines: Vec<&str> = thm7.lines().collect();
    assert_eq!(lines[0], "n,f,t,thm7");
    assert_eq!(lines[1], "2,1,1,2");
    assert_eq!(lines[2], "3,1,1,6");
    assert_eq!(stdout(&["table", "--which", "expected", "--t", "0", "--n", "5..2"]), "n,t,expected\n");
    assert!(stdout(&["table", "--which", "expected", "--t", "0", "--n", "4"]).ends_with("4,0,7/5\n"));
    assert_eq!(code(&["table", "--which", "cor4", "--t", "0", "--n", "two"]), 1);
}

#[test]
fn verify_exit_codes_and_report() {
    let out = stdout(&["verify", "--max-n", "0"]);
    assert!(out.contains("total 0 reports, 0 failures"), "{out}");
    assert_eq!(code(&["verify", "--max-n", "6"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let path_str = path.to_str().unwrap();
    assert_eq!(code(&["verify", "--max-n", "8", "--report", path_str]), 0);
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert!(!reports.is_empty());
    let allowed = ["agree", "disagree", "formula-domain-excluded"];
    assert!(reports.iter().all(|r| allowed.contains(&r["status"].as_str().unwrap())));
    let thm7 = reports
        .iter()
        .find(|r| r["check"] == "thm7" && r["params"] == serde_json::json!({"n": 3, "f": 1, "t": 1}))
        .expect("thm7 report");
    assert_eq!(thm7["formula"], 6);
    assert_eq!(thm7["status"], "agree");

    let missing = dir.path().join("no/such/dir/out.json");
    assert_eq!(code(&["verify", "--max-n", "2", "--report", missing.to_str().unwrap()]), 3);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["verify", "--max-n", "5"][..],
        &["series", "--family", "skew", "--f", "2", "--t", "1", "--order", "6"],
        &["table", "--which", "thm7", "--f", "2", "--t", "0", "--n", "1..9"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}
