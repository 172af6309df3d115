// Searches the bundled corpus for ideals separating the notions, and lists
// where the θ-stability statements break on P×P.

use krasner::theorems::{bundled_corpus, run_suite, search, SearchProperty, SuiteOptions};

pub fn run_example() -> krasner::Result<()> {
    let corpus = bundled_corpus()?;
    for property in SearchProperty::ALL {
        let found = search(&corpus, property)?;
        println!("{}: {} instance(s)", property.as_str(), found.len());
        for f in found.iter().take(3) {
            println!("  {} {} {}", f.structure, f.ideal, f.endo);
        }
    }

    let only = Some(vec!["T2".to_string()]);
    let reports = run_suite(&corpus, &SuiteOptions { only, literal_one: false })?;
    for f in reports[0].violations.iter().take(2) {
        println!("T2 fails on {}: {} with {} ({})", f.structure, f.ideals.join(" "), f.endos.join(" "), f.witness);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
