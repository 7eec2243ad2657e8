//! The acceptance suite. Prints one PASS/FAIL line per criterion, writes
//! report files under the cargo target tmp directory, and exits non-zero
//! if any criterion fails.
//!
//! Arguments that are criterion numbers restrict the run, e.g.
//! `cargo test --test acceptance -- 10 12`.

use std::path::PathBuf;
use std::process::ExitCode;

use bichroma_core::verify::{summary, Verifier, CRITERIA, DEFAULT_SEED};

fn main() -> ExitCode {
    let selected: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<u8> = CRITERIA.filter(|id| selected.is_empty() || selected.contains(id)).collect();
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).expect("report directory");

    let verifier = Verifier::new(DEFAULT_SEED);
    println!("acceptance suite, seed {DEFAULT_SEED}");
    let mut outcomes = Vec::new();
    for id in ids {
        let outcome = verifier.run(id);
        println!("{outcome}");
        for a in &outcome.artifacts {
            std::fs::write(dir.join(&a.name), &a.contents).expect("report file");
        }
        outcomes.push(outcome);
    }
    let text = summary(&outcomes);
    std::fs::write(dir.join("summary.txt"), &text).expect("summary file");
    println!("{}", text.lines().last().unwrap_or_default());
    println!("reports in {}", dir.display());
    if outcomes.iter().all(|o| o.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
