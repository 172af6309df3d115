// Parses a hand-written .hkr table, reports a parse error, and round-trips
// a structure through the serializer.

use krasner::format::{normalize, parse_structure, serialize};

const Z2: &str = "\
hyperring Z2
m 2
n 2
elements 0 1
zero 0
one 1
commutative add
commutative mul
add 0 0 -> 0
add 0 1 -> 1
add 1 1 -> 0
mul default -> 0
mul 1 1 -> 1
endo id: 0->0 1->1
";

pub fn run_example() -> krasner::Result<()> {
    let file = parse_structure(Z2)?;
    println!("{}: axioms pass {}", file.table.name(), file.table.verify_axioms().passed);
    let decls: Vec<(String, Vec<usize>)> = file.endos.iter().map(|d| (d.name.clone(), d.map.clone())).collect();
    let text = serialize(&file.table, &decls);
    let again = parse_structure(&text)?;
    println!("round trip stable: {}", normalize(&serialize(&again.table, &decls)) == normalize(&text));

    let broken = Z2.replace("add 1 1 -> 0", "add 1 1 -> 2");
    match parse_structure(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("error: {e}"),
    }
    print!("{text}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
