use krasner::format::parse_set;
use krasner::ideal::{enumerate_hyperideals, radical};
use krasner::theorems::{bundled_corpus, run_suite, SuiteOptions, THEOREMS};
use krasner::{classify, ElemSet, HyperringTable, Morphism};

fn tuples(size: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..size.pow(len as u32)).map(move |c| (0..len).map(|i| c / size.pow(i as u32) % size).collect())
}

fn replaced(t: &[usize], i: usize, one: usize) -> Vec<usize> {
    let mut r = t.to_vec();
    r[i] = one;
    r
}

/// Direct reading: a product in `e` forces, for some position, the factor in
/// `e` or the θ-image of the product with that factor replaced by one in
/// `target`.
fn direct(h: &HyperringTable, e: ElemSet, target: ElemSet, theta: Option<&Morphism>) -> bool {
    let one = h.one();
    tuples(h.size(), h.n()).all(|t| {
        !e.contains(h.mul(&t))
            || (0..t.len()).any(|i| {
                e.contains(t[i])
                    || match (theta, one) {
                        (Some(th), Some(o)) => target.contains(th.apply(h.mul(&replaced(&t, i, o)))),
                        (None, Some(o)) if target != e => target.contains(h.mul(&replaced(&t, i, o))),
                        _ => false,
                    }
            })
    })
}

#[test]
fn classification_agrees_with_direct_definitions() {
    let mut compared = 0;
    for entry in bundled_corpus().unwrap() {
        let h = &entry.table;
        for e in enumerate_hyperideals(h).iter().filter(|e| e.is_proper()) {
            let s = e.members();
            assert_eq!(classify::is_prime(h, e).unwrap().holds, direct(h, s, s, None), "{} {e} prime", h.name());
            if h.one().is_none() {
                continue;
            }
            let rad = radical(h, s);
            let primary = tuples(h.size(), h.n()).all(|t| {
                !s.contains(h.mul(&t))
                    || (0..t.len()).any(|i| s.contains(t[i]) || rad.contains(h.mul(&replaced(&t, i, h.one().unwrap()))))
            });
            assert_eq!(classify::is_primary(h, e).unwrap().holds, primary, "{} {e} primary", h.name());
            for (name, map) in &entry.endos {
                let th = Morphism::endo(name.clone(), h, map.clone()).unwrap();
                let ep = classify::is_endo_prime(h, e, &th).unwrap().holds;
                assert_eq!(ep, direct(h, s, s, Some(&th)), "{} {e} {name} Endo-prime", h.name());
                let epr = classify::is_endo_primary(h, e, &th).unwrap().holds;
                assert_eq!(epr, direct(h, s, rad, Some(&th)), "{} {e} {name} Endo-primary", h.name());
                compared += 1;
            }
        }
    }
    assert!(compared >= 30, "{compared}");
}

#[test]
fn counts_add_up_and_every_theorem_runs() {
    let corpus = bundled_corpus().unwrap();
    let reports = run_suite(&corpus, &SuiteOptions::default()).unwrap();
    assert_eq!(reports.len(), THEOREMS.len());
    for r in &reports {
        assert_eq!(r.checked, r.passed + r.vacuous + r.violated, "{}", r.id);
        assert!(r.checked > 0, "{} checked nothing", r.id);
    }
}

#[test]
fn violations_are_genuine() {
    let corpus = bundled_corpus().unwrap();
    let reports = run_suite(&corpus, &SuiteOptions::default()).unwrap();
    let mut seen = 0;
    for r in reports.iter().filter(|r| r.violated > 0) {
        for f in &r.violations {
            let entry = corpus.iter().find(|c| c.table.name() == f.structure).unwrap();
            let h = &entry.table;
            let e = parse_set(h, &f.ideals[0]).unwrap();
            let map = &entry.endos.iter().find(|(n, _)| *n == f.endos[0]).unwrap().1;
            let th = Morphism::endo(f.endos[0].clone(), h, map.clone()).unwrap();
            assert!(direct(h, e, e, None), "{}: {} is not prime", r.id, f.ideals[0]);
            assert!(direct(h, e, e, Some(&th)), "{}: {} is not Endo-prime", r.id, f.ideals[0]);
            assert!(!th.image_of(e).is_subset(e), "{}: θ keeps {}", r.id, f.ideals[0]);
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn literal_one_runs_everything() {
    let corpus = bundled_corpus().unwrap();
    let opts = SuiteOptions { only: Some(vec!["T1".into(), "T7".into(), "T17".into()]), literal_one: true };
    let reports = run_suite(&corpus, &opts).unwrap();
    for r in &reports {
        assert!(r.skips.iter().all(|s| s.reason == "no declared one"), "{}: {:?}", r.id, r.skips);
    }
}
