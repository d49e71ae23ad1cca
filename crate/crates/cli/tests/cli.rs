use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orientcount"))
        .args(args)
        .env_remove("ORIENT_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const K3: &str = "Bw";
const K44: &str = "G?~vf_";
const K133: &str = "Fs~v_";

#[test]
fn count_known_graphs() {
    let o = run(&["count"], &format!("{K3}\n{K44}\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n65536\n");
}

#[test]
fn count_with_oracle_json() {
    let o = run(&["count", "--oracle", "--json"], &format!("{K133}\n"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["count"], "2754");
    assert_eq!(v["oracle"], "2754");
}

#[test]
fn parse_errors_report_line_and_exit_two() {
    let o = run(&["count"], &format!("{K3}\n\n!!\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn ext_values() {
    // K4 minus the edge 2-3, with the disjoint K2s {0,2} and {1,3}.
    assert_eq!(stdout(&run(&["ext", "--a", "0,2", "--b", "1,3"], "C}\n")).split_whitespace().next(), Some("5"));
    // No cross edges.
    assert_eq!(stdout(&run(&["ext", "--a", "0,1", "--b", "2,3"], "C?\n")).split_whitespace().next(), Some("1"));
    // A vertex joined to 4 vertices of K5.
    let k5_plus = "E~~o";
    let o = run(&["ext", "--a", "5", "--b", "0,1,2,3,4"], &format!("{k5_plus}\n"));
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).split_whitespace().next(), Some("5"));
}

#[test]
fn ext_rejects_overlap() {
    let o = run(&["ext", "--a", "0,1", "--b", "1,2"], "C}\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn formula_and_enumerate() {
    assert_eq!(stdout(&run(&["formula", "--ell", "3"], "")), "2754\n");
    let o = run(&["enumerate", "--n", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
}

#[test]
fn verify_single_sizes() {
    let o = run(&["verify", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "n=4: max=24=4!: PASS");
    let o = run(&["verify", "8"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max=65536, unique maximizer K_{4,4}: PASS"));
}

#[test]
fn verify_all_reports_every_step() {
    let o = run(&["verify", "all", "--json"], "");
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 12);
    // The only failing step is the ledger, because of one false instance.
    let failing: Vec<&str> = lines
        .iter()
        .filter(|l| l["verdict"] != "PASS")
        .map(|l| l["step"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["inequality ledger"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn audit_exit_status_and_json() {
    let o = run(&["audit", "--max-n", "30", "--json"], "");
    assert_eq!(o.status.code(), Some(1));
    let failed_claims: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["scope"] == "claimed" && v["verdict"] == "FAILED")
        .collect();
    assert_eq!(failed_claims.len(), 1);
    assert_eq!(failed_claims[0]["id"], "ver4");
}

#[test]
fn certify_ext_passes() {
    let o = run(&["certify-ext", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.contains("\"verdict\":\"PASS\"")));
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let a = run(&["--workers", "1", "extremal", "--n", "6", "--json"], "");
    let b = run(&["--workers", "3", "extremal", "--n", "6", "--json"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_workers_rejected() {
    assert_eq!(run(&["--workers", "0", "formula", "--ell", "1"], "").status.code(), Some(2));
}
