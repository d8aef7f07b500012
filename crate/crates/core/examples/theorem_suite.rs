//! Run every property on the standard corpus with a given number of threads.
//!
//! cargo run --release --example theorem_suite [JOBS]

use graded_absorbing::harness::{enumerate_corpus, run_theorem_suite, CorpusSpec};

fn main() -> graded_absorbing::Result<()> {
    let jobs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let corpus = enumerate_corpus(&CorpusSpec::standard())?;
    let report = run_theorem_suite(&corpus, jobs)?;
    print!("{}", report.to_text());
    if !report.is_clean() {
        std::process::exit(1);
    }
    Ok(())
}
