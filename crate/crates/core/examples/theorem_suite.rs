// Runs the theorem suite over the bundled corpus and prints the summary.

use krasner::theorems::{bundled_corpus, render_reports, run_suite, SuiteOptions};

pub fn run_example() -> krasner::Result<()> {
    let corpus = bundled_corpus()?;
    let only = ["T1", "T5", "T7", "T13", "T14"].map(String::from).to_vec();
    let reports = run_suite(&corpus, &SuiteOptions { only: Some(only), literal_one: false })?;
    print!("{}", render_reports(&reports, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
