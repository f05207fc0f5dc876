use std::io::Write;
use std::process::{Command, Output};

use zagier_core::VerifyReport;

fn zagier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zagier"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_bstar_csv() {
    let o = zagier(&["compute", "bstar", "--max-n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n1,3/4\n2,1/24\n3,-1/4\n4,-27/80\n");
}

#[test]
fn compute_v_starts_at_zero() {
    let o = zagier(&["compute", "v", "--max-n", "3", "--format", "bfile"]);
    assert_eq!(stdout(&o), "0 0\n1 -1/2\n2 11/12\n3 1/2\n");
}

#[test]
fn compute_alpha_json() {
    let o = zagier(&["compute", "alpha", "--max-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["value"], "4");
    assert_eq!(v[1]["value"], "24");
}

#[test]
fn compute_single_index_and_point() {
    let o = zagier(&[
        "compute",
        "bstar-poly",
        "--n",
        "2",
        "--j",
        "-1",
        "--format",
        "bfile",
    ]);
    assert_eq!(stdout(&o), "2 -11/24\n");
    let o = zagier(&["compute", "z", "--n", "1", "--format", "bfile"]);
    assert_eq!(stdout(&o), "1 11/3\n");
}

#[test]
fn compute_is_deterministic() {
    let a = zagier(&["compute", "bstar-poly", "--max-n", "12", "--format", "json"]);
    let b = zagier(&["compute", "bstar-poly", "--max-n", "12", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(zagier(&["verify", "bogus-suite"]).status.code(), Some(2));
    assert_eq!(
        zagier(&["compute", "bstar", "--max-n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        zagier(&["compute", "bstar", "--j", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(zagier(&["compute", "nothing"]).status.code(), Some(2));
}

#[test]
fn verify_theorem12_passes() {
    let o = zagier(&["verify", "theorem12", "--max-n", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "theorem12");
    assert_eq!(v["failures"], 0);
    assert_eq!(v["range"]["hi"], 300);
}

#[test]
fn verify_vcross_passes() {
    let o = zagier(&["verify", "vcross", "--max-n", "40", "--heavy-max", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_report_round_trips() {
    let o = zagier(&["verify", "bell", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.suite, "bell");
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn verify_congruences_reports_the_mod64_step() {
    let o = zagier(&["verify", "congruences", "--max-n", "30"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["anchor"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["sum = 42 mod 64"]);
}

#[test]
fn oeis_export_first_terms() {
    let o = zagier(&["oeis", "export", "--max-n", "6"]);
    assert_eq!(stdout(&o), "1 6\n2 20\n3 315\n4 280\n5 66\n6 3003\n");
}

#[test]
fn oeis_compare_snapshot() {
    let o = zagier(&["oeis", "compare"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("compared 14 terms, 0 mismatches"));
}

#[test]
fn oeis_compare_corrupted_snapshot() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "1 6\n2 21\n3 315\n").unwrap();
    let path = f.path().to_str().unwrap();
    let o = zagier(&["oeis", "compare", "--snapshot", path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch at n=2: computed 20, reference 21"));
}

#[test]
fn oeis_compare_missing_snapshot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("absent.txt");
    let o = zagier(&["oeis", "compare", "--snapshot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--snapshot"));
}
