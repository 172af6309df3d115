use krasner::construct::{product_set, quotient};
use krasner::ideal::{self, enumerate_hyperideals, ideal_closure, is_hyperideal, Hyperideal};
use krasner::{fixtures, ElemSet, HyperringTable};
use proptest::prelude::*;

fn tables() -> Vec<HyperringTable> {
    vec![fixtures::p(), fixtures::g(), fixtures::s4(), fixtures::s4_bare(), fixtures::p_squared()]
}

fn subset_of(h: &HyperringTable, bits: u128) -> ElemSet {
    ElemSet::from_bits(bits).intersection(h.carrier())
}

proptest! {
    #[test]
    fn closure_is_an_idempotent_monotone_hyperideal(which in 0usize..5, a in any::<u128>(), b in any::<u128>()) {
        let h = &tables()[which];
        let (s, t) = (subset_of(h, a), subset_of(h, b));
        let c = ideal_closure(h, s).members();
        prop_assert!(s.is_subset(c));
        prop_assert!(is_hyperideal(h, c).holds);
        prop_assert_eq!(ideal_closure(h, c).members(), c);
        let ct = ideal_closure(h, s.union(t)).members();
        prop_assert!(c.is_subset(ct));
    }

    #[test]
    fn closure_is_the_least_hyperideal_above(which in 0usize..5, a in any::<u128>()) {
        let h = &tables()[which];
        let s = subset_of(h, a);
        let c = ideal_closure(h, s).members();
        for e in enumerate_hyperideals(h) {
            if s.is_subset(e.members()) {
                prop_assert!(c.is_subset(e.members()));
            }
        }
    }

    #[test]
    fn zero_is_neutral_and_iteration_starts_at_one_step(which in 0usize..5, xs in prop::collection::vec(any::<usize>(), 8)) {
        let h = &tables()[which];
        let m = h.m();
        let t: Vec<usize> = xs.iter().take(m).map(|x| x % h.size()).collect();
        prop_assert_eq!(h.iterated_add(1, &t).unwrap(), h.add(&t));
        let mut padded = vec![h.zero(); m];
        padded[0] = t[0];
        prop_assert_eq!(h.add(&padded), ElemSet::singleton(t[0]));
        let n = h.n();
        let u: Vec<usize> = xs.iter().take(n).map(|x| x % h.size()).collect();
        prop_assert_eq!(h.iterated_mul(1, &u).unwrap(), h.mul(&u));
    }

    #[test]
    fn long_powers_match_iterated_products(which in 0usize..5, u in any::<usize>(), l in 1usize..5) {
        let h = &tables()[which];
        let u = u % h.size();
        let r = l * (h.n() - 1) + 1;
        prop_assert_eq!(h.power(u, r).unwrap(), h.iterated_mul(l, &vec![u; r]).unwrap());
    }

    #[test]
    fn radical_contains_and_is_idempotent(which in 0usize..3, a in any::<u128>()) {
        let h = &[fixtures::p(), fixtures::g(), fixtures::p_squared()][which];
        let e = ideal_closure(h, subset_of(h, a)).members();
        let r = ideal::radical(h, e);
        prop_assert!(e.is_subset(r));
        prop_assert_eq!(ideal::radical(h, r), r);
        prop_assert!(is_hyperideal(h, r).holds);
    }

    #[test]
    fn products_of_hyperideals_are_hyperideals(a in any::<u128>(), b in any::<u128>()) {
        let p = fixtures::p();
        let g = fixtures::g();
        let pg = krasner::construct::product(&p, &g).unwrap();
        let e1 = ideal_closure(&p, subset_of(&p, a)).members();
        let e2 = ideal_closure(&g, subset_of(&g, b)).members();
        prop_assert!(is_hyperideal(&pg, product_set(p.size(), e1, e2)).holds);
    }
}

#[test]
fn meets_and_joins_stay_in_the_lattice() {
    for h in tables() {
        let all = enumerate_hyperideals(&h);
        for a in &all {
            for b in &all {
                assert!(all.contains(&a.intersection(b)), "{} {a} ∩ {b}", h.name());
                assert!(all.contains(&a.join(b)), "{} {a} + {b}", h.name());
            }
        }
    }
}

#[test]
fn quotients_pass_the_axioms() {
    for h in tables() {
        for e in enumerate_hyperideals(&h).iter().filter(|e| e.is_proper()) {
            let q = quotient(&h, e).unwrap();
            let r = q.table().verify_axioms();
            assert!(r.passed, "{}/{e}: {:?}", h.name(), r.violated());
            let zero = Hyperideal::zero(q.table());
            assert_eq!(q.class_of(h.zero()), q.table().zero());
            assert_eq!(zero.len(), 1);
        }
    }
}
