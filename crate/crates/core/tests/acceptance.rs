//! One line per acceptance criterion. Criteria that cannot hold as stated
//! print FAIL with the reason; the target itself fails only when an outcome
//! differs from the recorded one.

use krasner::construct::{self, QuotientStructure};
use krasner::format::{format_set, format_tuple, normalize, parse_set, parse_structure, parse_tuple, serialize};
use krasner::ideal::{self, enumerate_hyperideals, Hyperideal};
use krasner::morphism::{enumerate_endomorphisms, DEFAULT_ENDO_CAP};
use krasner::theorems::{bundled_corpus, run_suite, CorpusEntry, SuiteOptions};
use krasner::{classify, fixtures, AxiomId, ElemSet, HyperringTable, Morphism};

struct Line {
    pass: bool,
    detail: Vec<String>,
}

impl Line {
    fn new() -> Self {
        Line { pass: true, detail: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.detail.push(what.into());
        }
    }
}

fn entry_endos(h: &HyperringTable) -> Vec<Morphism<'_>> {
    enumerate_endomorphisms(h, DEFAULT_ENDO_CAP).expect("endomorphisms enumerate")
}

/// Every subset of a small carrier, filtered with a direct reading of the
/// hyperideal conditions.
fn subset_oracle(h: &HyperringTable) -> Vec<ElemSet> {
    let size = h.size();
    let mut out = Vec::new();
    let zero = h.zero();
    for bits in 0u64..(1 << size) {
        let s = ElemSet::from_bits(bits as u128);
        if !s.contains(zero) || !direct_hyperideal(h, s) {
            continue;
        }
        out.push(s);
    }
    out
}

fn direct_hyperideal(h: &HyperringTable, s: ElemSet) -> bool {
    let (m, n, size) = (h.m(), h.n(), h.size());
    for u in s.iter() {
        match h.inverse(u) {
            Some(i) if s.contains(i) => {}
            _ => return false,
        }
    }
    let members = s.to_vec();
    let mut t = vec![0; m];
    let mut stack = vec![0usize; m];
    loop {
        for (i, &k) in stack.iter().enumerate() {
            t[i] = members[k];
        }
        if !h.add(&t).is_subset(s) {
            return false;
        }
        let mut i = 0;
        while i < m && stack[i] + 1 == members.len() {
            stack[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        stack[i] += 1;
    }
    let mut t = vec![0; n];
    for u in s.iter() {
        for pos in 0..n {
            let mut idx = vec![0usize; n - 1];
            loop {
                let mut k = 0;
                for (j, slot) in t.iter_mut().enumerate() {
                    if j == pos {
                        *slot = u;
                    } else {
                        *slot = idx[k];
                        k += 1;
                    }
                }
                if !s.contains(h.mul(&t)) {
                    return false;
                }
                let mut i = 0;
                while i < n - 1 && idx[i] + 1 == size {
                    idx[i] = 0;
                    i += 1;
                }
                if i == n - 1 {
                    break;
                }
                idx[i] += 1;
            }
        }
    }
    true
}

/// The hyperideals of a binary structure as joins of element closures,
/// with the closure computed directly from the operations.
fn closure_oracle(h: &HyperringTable) -> Vec<ElemSet> {
    assert_eq!((h.m(), h.n()), (2, 2));
    let close = |mut s: ElemSet| loop {
        let mut next = s;
        next.insert(h.zero());
        for a in s.iter() {
            next = next.union(ElemSet::singleton(h.inverse(a).unwrap()));
            for b in s.iter() {
                next = next.union(h.add(&[a, b]));
            }
            for x in 0..h.size() {
                next.insert(h.mul(&[a, x]));
                next.insert(h.mul(&[x, a]));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    };
    let mut family: Vec<ElemSet> = vec![close(ElemSet::EMPTY)];
    for u in 0..h.size() {
        let c = close(ElemSet::singleton(u));
        if !family.contains(&c) {
            family.push(c);
        }
    }
    let mut i = 0;
    while i < family.len() {
        for j in 0..family.len() {
            let c = close(family[i].union(family[j]));
            if !family.contains(&c) {
                family.push(c);
            }
        }
        i += 1;
    }
    family.retain(|&s| direct_hyperideal(h, s));
    family
}

fn sorted(mut v: Vec<ElemSet>) -> Vec<ElemSet> {
    v.sort_by_key(|s| s.bits());
    v
}

fn criterion_1() -> Line {
    let mut line = Line::new();
    for h in [fixtures::p(), fixtures::g()] {
        let r = h.verify_axioms();
        line.check(r.passed && r.warnings.is_empty(), format!("{} has violations or warnings", h.name()));
    }
    let r = fixtures::s4().verify_axioms();
    let one_warning = r.warnings.len() == 1 && r.warnings[0].id.as_str() == "one-not-neutral";
    line.check(r.passed && one_warning, "S4 does not pass with exactly the one-not-neutral warning");
    assert_eq!(fixtures::P_MUTATIONS.len(), AxiomId::ALL.len());
    for m in fixtures::P_MUTATIONS {
        let violated = m.table().verify_axioms().violated();
        line.check(violated.contains(&m.axiom), format!("mutation for {} does not violate it", m.axiom));
        if violated != [m.axiom] {
            let names: Vec<&str> = violated.iter().map(|a| a.as_str()).collect();
            line.check(false, format!("`{}` violates {}", m.row, names.join("+")));
        }
    }
    line
}

fn criterion_2() -> Line {
    let mut line = Line::new();
    let s4 = fixtures::s4();
    let zero = Hyperideal::zero(&s4);
    let v = classify::is_prime(&s4, &zero).unwrap();
    line.check(!v.holds && v.witness_tuple() == Some(&[1, 2, 3, 3][..]), "is_prime(S4,{0})");
    let endos = entry_endos(&s4);
    line.check(!endos.is_empty(), "S4 has no endomorphisms");
    for t in &endos {
        let ok = classify::is_endo_prime(&s4, &zero, t).unwrap().holds;
        line.check(ok, format!("is_endo_prime(S4,{{0}},{})", t.name()));
    }
    let pp = fixtures::p_squared();
    let swap = fixtures::swap(&pp);
    let e = Hyperideal::zero(&pp);
    let v = classify::is_endo_prime(&pp, &e, &swap).unwrap();
    let witness = v.witness_tuple().map(|t| format_tuple(&pp, t));
    line.check(!v.holds && witness.as_deref() == Some("((1,0),(0,1))"), "is_endo_prime(P×P,{(0,0)},swap)");
    line.check(swap.image_of(e.members()).is_subset(e.members()), "swap({(0,0)}) ⊄ {(0,0)}");
    line.check(classify::is_hyperintegral_domain(&fixtures::g()).unwrap().holds, "G is not a domain");
    line
}

fn criterion_3() -> Line {
    let mut line = Line::new();
    let cases = [
        (fixtures::s4(), Some(4), true),
        (fixtures::p(), Some(2), true),
        (fixtures::g(), None, true),
        (fixtures::p_squared(), Some(4), false),
    ];
    for (h, count, small) in cases {
        let found = sorted(enumerate_hyperideals(&h).iter().map(|e| e.members()).collect());
        let oracle = sorted(if small { subset_oracle(&h) } else { closure_oracle(&h) });
        line.check(found == oracle, format!("{} lattice differs from the oracle", h.name()));
        if let Some(c) = count {
            line.check(found.len() == c, format!("{} has {} hyperideals, not {c}", h.name(), found.len()));
        }
    }
    if let Ok(big) = std::env::var("KRASNER_FULL_SUBSET_ORACLE") {
        if big == "1" {
            let pp = fixtures::p_squared();
            let found = sorted(enumerate_hyperideals(&pp).iter().map(|e| e.members()).collect());
            line.check(found == sorted(subset_oracle(&pp)), "P×P lattice differs from the subset oracle");
        }
    }
    let p = fixtures::p();
    let endos = entry_endos(&p);
    let mut brute = Vec::new();
    let size = p.size();
    for code in 0..size.pow(size as u32) {
        let map: Vec<usize> = (0..size).map(|i| code / size.pow(i as u32) % size).collect();
        if direct_endo(&p, &map) {
            brute.push(map);
        }
    }
    let mut got: Vec<Vec<usize>> = endos.iter().map(|f| f.map().to_vec()).collect();
    got.sort();
    brute.sort();
    line.check(got == brute && got.len() == 2, format!("P has {} endomorphisms, brute force {}", got.len(), brute.len()));
    line
}

fn direct_endo(h: &HyperringTable, f: &[usize]) -> bool {
    if f[h.zero()] != h.zero() || h.one().is_some_and(|o| f[o] != o) {
        return false;
    }
    for a in 0..h.size() {
        for b in 0..h.size() {
            let image: ElemSet = h.add(&[a, b]).iter().map(|x| f[x]).collect();
            if image != h.add(&[f[a], f[b]]) || f[h.mul(&[a, b])] != h.mul(&[f[a], f[b]]) {
                return false;
            }
        }
    }
    true
}

fn corpus_tables() -> Vec<HyperringTable> {
    bundled_corpus().unwrap().into_iter().map(|e| e.table).collect()
}

fn criterion_4() -> Line {
    let mut line = Line::new();
    for h in corpus_tables() {
        let neutral = classify::one_warnings(&h).is_empty();
        for e in enumerate_hyperideals(&h) {
            let primes_over = ideal::primes(&h).iter().any(|q| e.members().is_subset(q.members()));
            if !primes_over {
                continue;
            }
            let (r, pr) = (ideal::radical(&h, e.members()), ideal::prime_radical(&h, e.members()));
            if r != pr {
                assert!(!neutral, "{} {e}: radicals differ with a neutral one", h.name());
                let msg = format!("{} {e}: rad {} vs primes {}", h.name(), format_set(&h, r), format_set(&h, pr));
                line.check(false, msg + " (declared one not neutral)");
            }
        }
    }
    let bare = fixtures::s4_bare();
    let zero = ElemSet::singleton(bare.zero());
    let want = parse_set(&bare, "0,1").unwrap();
    line.check(ideal::radical(&bare, zero) == want, "S4-bare rad({0}) is not {0,1}");
    line.check(ideal::prime_radical(&bare, zero) == want, "S4-bare prime radical of {0} is not {0,1}");
    line
}

fn criterion_5() -> Line {
    let mut line = Line::new();
    let pp = fixtures::p_squared();
    let diag = construct::diagonal(&fixtures::p());
    if let Err(e) = construct::subhyperring(&pp, diag, "diag") {
        line.check(false, format!("the diagonal of P×P is not a subhyperring ({e})"));
    }
    let corpus = bundled_corpus().unwrap();
    let reports = run_suite(&corpus, &SuiteOptions::default()).unwrap();
    let total: usize = reports.iter().map(|r| r.violated).sum();
    if total > 0 {
        let ids: Vec<String> = reports.iter().filter(|r| r.violated > 0).map(|r| format!("{}:{}", r.id, r.violated)).collect();
        line.check(false, format!("{total} violations on the bundled corpus ({})", ids.join(" ")));
    }
    for r in &reports {
        for f in &r.violations {
            assert!(
                prime_and_moved(&corpus, &f.structure, &f.ideals[0], &f.endos[0]),
                "{} violation outside the prime-not-stable family: {f:?}",
                r.id
            );
        }
        for s in &r.skips {
            assert!(
                s.reason == "no declared one" || s.reason.contains("not a scalar identity"),
                "unexpected skip {s:?}"
            );
        }
    }
    line
}

/// Whether the ideal is prime and the endomorphism moves it out of itself.
fn prime_and_moved(corpus: &[CorpusEntry], structure: &str, ideal_text: &str, endo: &str) -> bool {
    let entry = corpus.iter().find(|e| e.table.name() == structure).unwrap();
    let h = &entry.table;
    let e = Hyperideal::new(h, parse_set(h, ideal_text).unwrap()).unwrap();
    let map = &entry.endos.iter().find(|(n, _)| n == endo).unwrap().1;
    let theta = Morphism::endo(endo, h, map.clone()).unwrap();
    classify::is_prime(h, &e).unwrap().holds && !theta.image_of(e.members()).is_subset(e.members())
}

fn criterion_6() -> Line {
    let mut line = Line::new();
    for h in [fixtures::p(), fixtures::p_squared()] {
        assert_eq!(h.n(), 2);
        let id = Morphism::identity(&h);
        for e in enumerate_hyperideals(&h).iter().filter(|e| e.is_proper()) {
            let a = classify::is_endo_prime(&h, e, &id).unwrap().holds;
            let b = classify::is_prime(&h, e).unwrap().holds;
            line.check(a == b, format!("{} {e}: Endo-prime {a}, prime {b}", h.name()));
        }
    }
    for h in corpus_tables() {
        let id = Morphism::identity(&h);
        for e in enumerate_hyperideals(&h) {
            let ok = ideal::theta_radical(&h, e.members(), &id) == ideal::radical(&h, e.members());
            line.check(ok, format!("{} {e}: θ-radical differs from radical", h.name()));
        }
        let q = construct::quotient(&h, &Hyperideal::zero(&h)).unwrap();
        line.check(same_table(&h, &q), format!("{}/{{0}} is not a copy of it", h.name()));
    }
    line
}

fn same_table(h: &HyperringTable, q: &QuotientStructure) -> bool {
    let t = q.table();
    let f = |u: usize| q.class_of(u);
    if t.size() != h.size() || t.zero() != f(h.zero()) || t.one() != h.one().map(f) {
        return false;
    }
    if (0..h.size()).any(|u| t.label(f(u)) != format!("[{}]", h.label(u))) {
        return false;
    }
    let ok_add = all_tuples(h.size(), h.m(), |tu| {
        let img: Vec<usize> = tu.iter().map(|&u| f(u)).collect();
        let sum: ElemSet = h.add(tu).iter().map(f).collect();
        sum == t.add(&img)
    });
    ok_add
        && all_tuples(h.size(), h.n(), |tu| {
            let img: Vec<usize> = tu.iter().map(|&u| f(u)).collect();
            f(h.mul(tu)) == t.mul(&img)
        })
}

fn all_tuples(size: usize, len: usize, mut ok: impl FnMut(&[usize]) -> bool) -> bool {
    let mut t = vec![0; len];
    loop {
        if !ok(&t) {
            return false;
        }
        let mut i = 0;
        while i < len && t[i] + 1 == size {
            t[i] = 0;
            i += 1;
        }
        if i == len {
            return true;
        }
        t[i] += 1;
    }
}

fn criterion_7() -> Line {
    let mut line = Line::new();
    for (name, text) in fixtures::ALL_FILES {
        let f = parse_structure(text).unwrap();
        let endos: Vec<_> = f.endos.iter().map(|d| (d.name.clone(), d.map.clone())).collect();
        let written = serialize(&f.table, &endos);
        line.check(normalize(&written) == normalize(text), format!("{name} does not round-trip"));
        let again = parse_structure(&written).unwrap();
        line.check(serialize(&again.table, &endos) == written, format!("{name} reserializes differently"));
    }
    let mut witnesses = 0;
    for entry in bundled_corpus().unwrap() {
        let h = &entry.table;
        for e in enumerate_hyperideals(h).iter().filter(|e| e.is_proper()) {
            let text = format_set(h, e.members());
            line.check(parse_set(h, &text).ok() == Some(e.members()), format!("{text} does not re-parse"));
            let mut verdicts = vec![classify::is_prime(h, e), classify::is_primary(h, e)];
            for (name, map) in &entry.endos {
                let t = Morphism::endo(name.clone(), h, map.clone()).unwrap();
                verdicts.push(classify::is_endo_prime(h, e, &t));
                verdicts.push(classify::is_endo_primary(h, e, &t));
            }
            for v in verdicts.into_iter().flatten() {
                if let Some(t) = v.witness_tuple() {
                    witnesses += 1;
                    let printed = format_tuple(h, t);
                    line.check(parse_tuple(h, &printed).ok().as_deref() == Some(t), format!("{printed} does not re-parse"));
                }
            }
        }
    }
    line.check(witnesses > 0, "no witnesses were printed");
    line
}

fn main() {
    let expected = [false, true, true, false, false, true, true];
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ];
    let mut unexpected = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let status = if line.pass { "PASS" } else { "FAIL" };
        if line.detail.is_empty() {
            println!("criterion {}: {status}", i + 1);
        } else {
            println!("criterion {}: {status}: {}", i + 1, line.detail.join("; "));
        }
        if line.pass != expected[i] {
            unexpected.push(i + 1);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with an unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
