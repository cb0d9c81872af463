use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_genuine-smalls"));
    c.env_remove("GENUINE_SMALLS_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn dump_rd_d4_has_four_subsets() {
    let v = json_of(&["dump", "rd", "--type", "D", "--rank", "4"]);
    assert_eq!(v["subsets"].as_array().unwrap().len(), 4);
}

#[test]
fn dump_pairs_d4_has_sixteen_cells() {
    let v = json_of(&["dump", "pairs", "--type", "D", "--n", "4"]);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 16);
    assert!(cells.iter().all(|c| c["representations"].as_array().unwrap().len() == 1));
}

#[test]
fn dump_chartable_g2_has_six_irreducibles() {
    let v = json_of(&["dump", "chartable", "--type", "G2"]);
    assert_eq!(v["irreps"].as_array().unwrap().len(), 6);
    assert_eq!(v["order"], 12);
}

#[test]
fn dump_rootsys_uses_string_rationals() {
    let v = json_of(&["dump", "rootsys", "--type", "D", "--rank", "4"]);
    assert_eq!(v["type"], "D");
    assert_eq!(v["rank"], 4);
    assert_eq!(v["coords"][0], serde_json::json!(["3", "2"]));
}

#[test]
fn output_is_deterministic() {
    for args in [&["table1"][..], &["--format", "json", "table2"], &["dump", "pairs", "--type", "D", "--n", "6"]] {
        let (a, b) = (run(args), run(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_report_is_stable_across_thread_counts() {
    let a = run(&["--format", "json", "verify", "--scope", "params", "--threads", "1"]);
    let b = run(&["--format", "json", "verify", "--scope", "params", "--threads", "8"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["dump", "nonsense", "--type", "D4"]).status.code(), Some(2));
    assert_eq!(run(&["count-star", "--type", "B", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--scope", "nowhere"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn failing_claims_exit_with_one() {
    let o = run(&["verify", "--scope", "table2.su"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn recorded_discrepancies_do_not_fail() {
    let o = run(&["--format", "json", "verify", "--scope", "rd.p-over-r"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["claims"][0]["status"], "recorded-discrepancy");
}

#[test]
fn count_star_trace_is_json_lines() {
    let o = run(&["count-star", "--type", "D", "--n", "6", "--trace"]);
    assert!(o.status.success());
    let lines: Vec<Value> =
        String::from_utf8(o.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let last = lines.last().unwrap();
    assert_eq!(last["count"], 4);
    let survivors = lines[..lines.len() - 1].iter().filter(|l| l["verdict"] == "survivor").count();
    assert!(survivors >= 4);
    assert!(lines[..lines.len() - 1].iter().any(|l| l["verdict"] == "C"));
}

#[test]
fn ktypes_json_is_keyed_by_label() {
    let v = json_of(&["--format", "json", "ktypes", "--group", "spin44", "--bound", "6"]);
    let fams = v["families"].as_object().unwrap();
    assert_eq!(fams.len(), 16);
    assert!(fams.contains_key("Sh1") && fams.contains_key("τ4"));
}

#[test]
fn chartable_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run_cached = || {
        bin()
            .env("GENUINE_SMALLS_CACHE", dir.path())
            .args(["dump", "chartable", "--type", "B3"])
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert!(first.status.success());
    let file = dir.path().join("chartable-B3.json");
    assert!(file.exists());
    let second = run_cached();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, run(&["dump", "chartable", "--type", "B3"]).stdout);
}
