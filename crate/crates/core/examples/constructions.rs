// Products, quotients, induced endomorphisms and subhyperrings.

use krasner::{construct, fixtures, format::format_set, ideal, Morphism};

pub fn run_example() -> krasner::Result<()> {
    let (p, g) = (fixtures::p(), fixtures::g());
    let pg = construct::product(&p, &g)?;
    println!("{}: {} elements, axioms pass: {}", pg.name(), pg.size(), pg.verify_axioms().passed);

    let s4 = fixtures::s4();
    let e = ideal::parse_ideal(&s4, "0,1")?;
    let q = construct::quotient(&s4, &e)?;
    for (i, &c) in q.classes().iter().enumerate() {
        println!("{} class {}: {}", q.table().name(), q.table().label(i), format_set(&s4, c));
    }
    let id = Morphism::identity(&s4);
    let induced = construct::induced_endo(&q, &id)?;
    println!("induced {} is the identity: {}", induced.name(), induced.is_identity());

    let pp = fixtures::p_squared();
    let diag = construct::diagonal(&fixtures::p());
    match construct::check_subhyperring(&pp, diag) {
        Ok(()) => println!("the diagonal is a subhyperring"),
        Err(err) => println!("diagonal: {err}"),
    }
    let closure = construct::subhyperring_closure(&pp, diag);
    println!("generated subhyperring has {} elements", closure.len());

    let zero_one = krasner::format::parse_set(&s4, "0,1")?;
    let sub = construct::subhyperring(&s4, zero_one, "S4|{0,1}")?;
    println!("{}: axioms pass {}", sub.name(), sub.verify_axioms().passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
