// Checks the hyperring axioms on the bundled tables and on a broken copy of P.

use krasner::{fixtures, format::format_tuple, AxiomId};

pub fn run_example() -> krasner::Result<()> {
    for (name, text) in fixtures::ALL_FILES {
        let file = krasner::format::parse_structure(text)?;
        let report = file.table.verify_axioms();
        println!("{name}: {}", if report.passed { "pass" } else { "fail" });
        for w in &report.warnings {
            println!("  warning {}: {}", w.id, format_tuple(&file.table, &w.witness));
        }
    }

    let m = &fixtures::P_MUTATIONS[0];
    let broken = m.table();
    let report = broken.verify_axioms();
    println!("P with `{}`:", m.row);
    for v in &report.violations {
        println!("  {} fails {} time(s), first at {}", v.axiom, v.count, format_tuple(&broken, &v.witness));
    }
    assert!(report.violated().contains(&AxiomId::Identity));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
