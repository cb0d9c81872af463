//! Runs the full registry, including the deep oracle targets, and prints
//! one line per claim plus one summary line per acceptance criterion.

use genuine_smalls::cache::Ctx;
use genuine_smalls::checks::{registry, run, Status};

#[test]
fn acceptance() {
    let claims = registry();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let lines = run(&claims, &Ctx::from_env(), threads);
    for l in &lines {
        println!("{:<20} {} {}", l.status.as_str(), l.id, l.detail);
    }
    let mut any_fail = false;
    for c in 1..=7u8 {
        let mine: Vec<_> = lines.iter().filter(|l| l.criterion == Some(c)).collect();
        let fails: Vec<&str> = mine.iter().filter(|l| l.status == Status::Fail).map(|l| l.id.as_str()).collect();
        let recorded = mine.iter().filter(|l| l.status == Status::RecordedDiscrepancy).count();
        any_fail |= !fails.is_empty();
        println!(
            "criterion {c}: {} ({} claims, {} recorded-discrepancy){}",
            if fails.is_empty() { "PASS" } else { "FAIL" },
            mine.len(),
            recorded,
            if fails.is_empty() { String::new() } else { format!("; failing: {}", fails.join(", ")) }
        );
    }
    let other: Vec<&str> =
        lines.iter().filter(|l| l.criterion.is_none() && l.status == Status::Fail).map(|l| l.id.as_str()).collect();
    assert!(other.is_empty(), "supporting claims failed: {other:?}");
    assert!(!any_fail, "acceptance criteria failed");
}
