// Prime, primary and Endo-prime classification with witnesses.

use krasner::{classify, fixtures, format::format_tuple, ideal, Hyperideal, Kind, Morphism};

pub fn run_example() -> krasner::Result<()> {
    let s4 = fixtures::s4();
    let zero = Hyperideal::zero(&s4);
    let prime = classify::is_prime(&s4, &zero)?;
    println!("S4 {{0}} prime: {} witness {}", prime.holds, format_tuple(&s4, prime.witness_tuple().unwrap()));
    let id = Morphism::identity(&s4);
    let ep = classify::is_endo_prime(&s4, &zero, &id)?;
    println!("S4 {{0}} Endo-prime for the identity: {}", ep.holds);
    for w in &ep.warnings {
        println!("  warning: {w}");
    }

    let pp = fixtures::p_squared();
    let swap = fixtures::swap(&pp);
    let e = Hyperideal::zero(&pp);
    let v = classify::is_endo_prime(&pp, &e, &swap)?;
    println!(
        "P×P {{(0,0)}} Endo-prime for swap: {} witness {}",
        v.holds,
        format_tuple(&pp, v.witness_tuple().unwrap())
    );

    let half = ideal::parse_ideal(&pp, "(0,0),(1,0),(u,0),(v,0),(w,0)")?;
    for kind in [Kind::Prime, Kind::EndoPrime, Kind::EndoPrimary, Kind::ThetaMaximal] {
        let v = classify::classify(&pp, &half, kind, Some(&swap))?;
        println!("P×{{0}} {kind} for swap: {}", v.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
