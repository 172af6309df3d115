// Enumerates endomorphisms and shows kernels, images and composition.

use krasner::{fixtures, format::format_set, morphism};

pub fn run_example() -> krasner::Result<()> {
    let pp = fixtures::p_squared();
    let endos = morphism::enumerate_endomorphisms(&pp, morphism::DEFAULT_ENDO_CAP)?;
    println!("P×P has {} endomorphisms", endos.len());
    for f in endos.iter().take(6) {
        println!(
            "  {}: kernel {}, image of size {}, (1,0) ↦ {}",
            f.name(),
            format_set(&pp, morphism::kernel(f)),
            f.image().len(),
            pp.label(f.apply(pp.elem("(1,0)")?))
        );
    }

    let swap = fixtures::swap(&pp);
    let twice = swap.after(&swap)?;
    println!("swap ∘ swap is the identity: {}", twice.is_identity());

    let s4 = fixtures::s4();
    let map = vec![0, 1, 0, 1];
    let v = morphism::verify_morphism(&map, &s4, &s4)?;
    println!("S4: 0,1,2,3 ↦ 0,1,0,1 is an endomorphism: {}", v.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
