macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(axioms, "axioms.rs");
example!(ideal_lattice, "ideal_lattice.rs");
example!(endomorphisms, "endomorphisms.rs");
example!(classify, "classify.rs");
example!(radicals, "radicals.rs");
example!(constructions, "constructions.rs");
example!(theorem_suite, "theorem_suite.rs");
example!(counterexamples, "counterexamples.rs");
example!(file_format, "file_format.rs");

#[test]
fn examples_run() {
    axioms::run_example().unwrap();
    ideal_lattice::run_example().unwrap();
    endomorphisms::run_example().unwrap();
    classify::run_example().unwrap();
    radicals::run_example().unwrap();
    constructions::run_example().unwrap();
    theorem_suite::run_example().unwrap();
    counterexamples::run_example().unwrap();
    file_format::run_example().unwrap();
}
