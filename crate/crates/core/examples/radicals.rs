// Radicals, θ-radicals, colons and principal hyperideals in P×P.

use krasner::{fixtures, format::format_set, ideal};

pub fn run_example() -> krasner::Result<()> {
    let pp = fixtures::p_squared();
    let swap = fixtures::swap(&pp);
    for e in ideal::enumerate_hyperideals(&pp).iter().filter(|e| e.is_proper()) {
        println!(
            "{e}: rad {}, prime rad {}, swap-rad {}",
            format_set(&pp, ideal::radical(&pp, e.members())),
            format_set(&pp, ideal::prime_radical(&pp, e.members())),
            format_set(&pp, ideal::theta_radical(&pp, e.members(), &swap))
        );
    }
    let e = ideal::parse_ideal(&pp, "(0,0),(1,0),(u,0),(v,0),(w,0)")?;
    let a = krasner::format::parse_set(&pp, "(0,1)")?;
    println!("(P×{{0}} : (0,1)) = {}", format_set(&pp, ideal::colon(&pp, &e, a)?));
    let gen = ideal::principal(&pp, pp.elem("(1,0)")?)?;
    println!("⟨(1,0)⟩ = {}", format_set(&pp, gen.members));
    println!("nilpotents: {}", format_set(&pp, ideal::nilpotents(&pp)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
