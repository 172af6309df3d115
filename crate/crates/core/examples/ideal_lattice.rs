// Hyperideals, primes, maximal hyperideals and radicals of S4 and P×P.

use krasner::{fixtures, format::format_set, ideal};

pub fn run_example() -> krasner::Result<()> {
    for h in [fixtures::s4(), fixtures::p_squared()] {
        println!("{}:", h.name());
        for e in ideal::enumerate_hyperideals(&h) {
            let rad = ideal::radical(&h, e.members());
            println!("  {e}  rad = {}", format_set(&h, rad));
        }
        let primes: Vec<String> = ideal::primes(&h).iter().map(|q| q.to_string()).collect();
        println!("  primes: {}", primes.join(" "));
        let max: Vec<String> = ideal::max_spectrum(&h).iter().map(|m| m.to_string()).collect();
        println!("  maximal: {}", max.join(" "));
        if let Some(note) = ideal::radical_note(&h) {
            println!("  note: {note}");
        }
    }

    let p = fixtures::p();
    let u = p.elem("u")?;
    let closure = ideal::ideal_closure(&p, krasner::ElemSet::singleton(u));
    println!("P: ⟨u⟩ = {closure}, u invertible: {}", ideal::is_invertible(&p, u)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
