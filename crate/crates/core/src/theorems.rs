//! Executable checks of the Endo-prime and Endo-primary theorems over a
//! finite corpus, and a search for instances of the non-converses.
//!
//! Every theorem is instantiated over all endomorphisms and hyperideals of
//! each structure. An instance whose hypothesis fails is counted as vacuous,
//! one whose conclusion holds as passed, and anything else is a violation
//! with a description of what broke. Theorems stated in terms of `1_H` are
//! skipped, with a note, on structures without a declared one and, unless
//! [`SuiteOptions::literal_one`] is set, on structures whose declared one is
//! not a scalar identity.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::classify::{self, one_warnings};
use crate::construct::{self, QuotientStructure};
use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::format::{format_set, format_tuple};
use crate::ideal::{
    enumerate_hyperideals, ideal_closure, is_hyperideal, max_spectrum, minimal_primes_over, nilpotents, radical,
    theta_nilpotents, theta_radical, Hyperideal,
};
use crate::morphism::{commutes, enumerate_endomorphisms, kernel, Morphism, DEFAULT_ENDO_CAP};
use crate::table::HyperringTable;
use crate::verdict::{Verdict, Witness};

/// Theorem ids and one-line statements, in report order.
pub const THEOREMS: [(&str, &str); 20] = [
    ("T1", "the radical of an Endo-prime hyperideal is Endo-prime"),
    ("T2", "an Endo-prime hyperideal E has θ(E) ⊆ E"),
    ("T3", "θ⁻¹(E) and (E:A) are Endo-prime; powers in E or θ⁻¹(E) push θ(u) or θ²(u) into E"),
    ("T4", "Endo-prime ⇔ colon condition ⇔ strongly Endo-prime ⇔ (E:x) = E off θ⁻¹(E)"),
    ("T5", "the intersection of a chain of Endo-prime hyperideals is Endo-prime"),
    ("T6", "θ(Q) ⊆ E for every minimal prime Q over an Endo-prime E"),
    ("T7", "if θ fixes every prime, Endo-prime ⇔ prime"),
    ("T8", "θ(rad E) ⊆ E and θ(nilpotents) ⊆ E for Endo-prime E"),
    ("T9", "preimages of Endo-prime hyperideals under maps commuting with θ are Endo-prime"),
    ("T10", "Ker θ lies in every Endo-prime hyperideal"),
    ("T11", "on a hyperintegral domain the θ-radicals are intersections of Endo-primes"),
    ("T12", "strongly Endo-prime ⇒ H/E is a θ_E-domain ⇒ Endo-prime"),
    ("T13", "Endo-primality transfers along commuting homomorphisms, subhyperrings and H/Ker θ"),
    ("T14", "the Endo-primes of a product are E1 × H2 and H1 × E2"),
    ("T15", "the radical of an Endo-primary hyperideal is Endo-prime"),
    ("T16", "Endo-primary E has θ(E) ⊆ rad E and u ∈ rad E ⇒ u ∈ E or θ(u) ∈ rad E"),
    ("T17", "{0} is θ-maximal ⇔ Max(H) = {Ker θ}"),
    ("T18", "intersections of Endo-primaries (and of primaries) with one radical"),
    ("T19", "for Endo-primary E: (E:u) = H on E and (E:u) = E when θ(u) ∉ rad E"),
    ("T20", "θ-maximal ⇒ Endo-prime; θ-maximal radical ⇒ Endo-primary"),
];

/// Largest product carrier used by the product and projection checks.
pub const PAIR_PRODUCT_CAP: usize = 25;
/// Largest carrier used by the three-factor product check.
pub const TRIPLE_PRODUCT_CAP: usize = 64;
/// Largest `|H1 × … × Ht|^n` for the product checks.
pub const PRODUCT_WORK_CAP: usize = 1 << 16;
/// Largest group of equal-radical hyperideals whose subfamilies are checked.
const GROUP_CAP: usize = 10;
/// Violations kept per theorem; further ones are only counted.
const KEEP: usize = 200;

/// A structure together with the endomorphisms to quantify over.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub table: HyperringTable,
    pub endos: Vec<(String, Vec<Elem>)>,
}

impl CorpusEntry {
    pub fn new(table: HyperringTable, endos: Vec<(String, Vec<Elem>)>) -> Self {
        CorpusEntry { table, endos }
    }

    /// All endomorphisms of `table`; maps that appear in `declared` keep the
    /// declared name.
    pub fn enumerated(table: HyperringTable, declared: &[(String, Vec<Elem>)]) -> Result<Self> {
        let found = enumerate_endomorphisms(&table, DEFAULT_ENDO_CAP)?;
        let endos = found
            .iter()
            .map(|f| {
                let name = declared
                    .iter()
                    .find(|(_, m)| m.as_slice() == f.map())
                    .map_or_else(|| f.name().to_string(), |(n, _)| n.clone());
                (name, f.map().to_vec())
            })
            .collect();
        Ok(CorpusEntry { table, endos })
    }
}

/// The bundled structures with all their endomorphisms: `P`, `G`, `S4`,
/// `S4-bare`, `P×P`, `Z4`, the quotients of `S4` and `S4-bare` by `{0,1}`, and the
/// subhyperring `{0,1}` of `S4-bare`.
pub fn bundled_corpus() -> Result<Vec<CorpusEntry>> {
    use crate::fixtures;
    let pp_file = crate::format::parse_structure(fixtures::P_SQUARED_HKR)?;
    let declared: Vec<(String, Vec<Elem>)> = pp_file.endos.iter().map(|d| (d.name.clone(), d.map.clone())).collect();
    let s4 = fixtures::s4();
    let bare = fixtures::s4_bare();
    let q = |h: &HyperringTable| -> Result<HyperringTable> {
        let e = Hyperideal::new(h, crate::format::parse_set(h, "0,1")?)?;
        Ok(construct::quotient(h, &e)?.into_table())
    };
    let sub = construct::subhyperring(&bare, crate::format::parse_set(&bare, "0,1")?, "S4-bare|{0,1}")?;
    let (qs4, qbare) = (q(&s4)?, q(&bare)?);
    let mut out = vec![
        CorpusEntry::enumerated(fixtures::p(), &[])?,
        CorpusEntry::enumerated(fixtures::g(), &[])?,
        CorpusEntry::enumerated(s4, &[])?,
        CorpusEntry::enumerated(bare, &[])?,
        CorpusEntry::enumerated(pp_file.table, &declared)?,
        CorpusEntry::enumerated(fixtures::z4(), &[])?,
    ];
    for t in [qs4, qbare, sub] {
        out.push(CorpusEntry::enumerated(t, &[])?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Theorem ids to run; all when `None`.
    pub only: Option<Vec<String>>,
    /// Run the identity-using theorems with a declared one even when it is
    /// not a scalar identity.
    pub literal_one: bool,
}

/// An instance whose conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub structure: String,
    pub ideals: Vec<String>,
    pub endos: Vec<String>,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skip {
    pub structure: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub id: &'static str,
    pub title: &'static str,
    pub checked: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub violated: usize,
    /// The first violations, in instance order.
    pub violations: Vec<Finding>,
    pub skips: Vec<Skip>,
    pub elapsed: Duration,
}

enum Outcome {
    Vacuous,
    Pass,
    Fail(String),
}

fn outcome(hyp: bool, concl: impl FnOnce() -> Option<String>) -> Outcome {
    if !hyp {
        return Outcome::Vacuous;
    }
    match concl() {
        None => Outcome::Pass,
        Some(why) => Outcome::Fail(why),
    }
}

impl TheoremReport {
    fn new(id: &'static str, title: &'static str) -> Self {
        TheoremReport {
            id,
            title,
            checked: 0,
            passed: 0,
            vacuous: 0,
            violated: 0,
            violations: Vec::new(),
            skips: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, o: Outcome, structure: &str, ideals: Vec<String>, endos: Vec<String>) {
        self.checked += 1;
        match o {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Pass => self.passed += 1,
            Outcome::Fail(witness) => {
                self.violated += 1;
                if self.violations.len() < KEEP {
                    self.violations.push(Finding {
                        structure: structure.to_string(),
                        ideals,
                        endos,
                        witness,
                    });
                }
            }
        }
    }

    fn skip(&mut self, structure: &str, reason: impl Into<String>) {
        self.skips.push(Skip {
            structure: structure.to_string(),
            reason: reason.into(),
        });
    }

    /// The report as `KEY: VALUE` lines, at most `limit` violations listed.
    pub fn render(&self, limit: usize) -> String {
        let mut s = format!(
            "{}: checked {}, passed {}, vacuous {}, violated {}, skipped {}\n",
            self.id,
            self.checked,
            self.passed,
            self.vacuous,
            self.violated,
            self.skips.len()
        );
        for k in &self.skips {
            let _ = writeln!(s, "{} skip: {}: {}", self.id, k.structure, k.reason);
        }
        for f in self.violations.iter().take(limit) {
            let _ = writeln!(
                s,
                "{} violation: {}; ideals {}; endos {}; {}",
                self.id,
                f.structure,
                if f.ideals.is_empty() { "-".into() } else { f.ideals.join(" ") },
                if f.endos.is_empty() { "-".into() } else { f.endos.join(" ") },
                f.witness
            );
        }
        if self.violated > limit.min(self.violations.len()) {
            let _ = writeln!(s, "{} more: {}", self.id, self.violated - limit.min(self.violations.len()));
        }
        s
    }
}

/// All reports followed by a `violations: N` total line.
pub fn render_reports(reports: &[TheoremReport], limit: usize) -> String {
    let mut s: String = reports.iter().map(|r| r.render(limit)).collect();
    let total: usize = reports.iter().map(|r| r.violated).sum();
    let _ = writeln!(s, "violations: {total}");
    s
}

fn ep(h: &HyperringTable, e: ElemSet, theta: &Morphism) -> bool {
    e != h.carrier()
        && is_hyperideal(h, e).holds
        && classify::is_endo_prime(h, &Hyperideal::trusted(h, e), theta).is_ok_and(|v| v.holds)
}

fn epr(h: &HyperringTable, e: ElemSet, theta: &Morphism) -> bool {
    e != h.carrier()
        && is_hyperideal(h, e).holds
        && classify::is_endo_primary(h, &Hyperideal::trusted(h, e), theta).is_ok_and(|v| v.holds)
}

fn prime(h: &HyperringTable, e: ElemSet) -> bool {
    e != h.carrier() && classify::is_prime(h, &Hyperideal::trusted(h, e)).is_ok_and(|v| v.holds)
}

fn primary(h: &HyperringTable, e: ElemSet) -> bool {
    e != h.carrier() && classify::is_primary(h, &Hyperideal::trusted(h, e)).is_ok_and(|v| v.holds)
}

/// Why `h` cannot carry the identity-using theorems, if it cannot.
fn one_gate(h: &HyperringTable, opts: &SuiteOptions) -> Option<String> {
    match h.one() {
        None => Some("no declared one".into()),
        Some(_) if opts.literal_one => None,
        Some(_) => one_warnings(h).into_iter().next(),
    }
}

/// Text for a failing verdict's witness.
pub fn describe(h: &HyperringTable, v: &Verdict) -> String {
    match &v.witness {
        None => format!("{} holds", v.kind),
        Some(Witness::Tuple { tuple, note, .. }) => format!("not {}: {note} {}", v.kind, format_tuple(h, tuple)),
        Some(Witness::Ideals { ideals, note }) => {
            let sets: Vec<String> = ideals.iter().map(|&s| format_set(h, s)).collect();
            format!("not {}: {note} {}", v.kind, sets.join(" "))
        }
    }
}

/// Why `e` is not Endo-prime with respect to `theta`.
fn why_not_ep(h: &HyperringTable, e: ElemSet, theta: &Morphism) -> String {
    if e == h.carrier() {
        return format!("{} is all of {}", format_set(h, e), h.name());
    }
    let v = is_hyperideal(h, e);
    if !v.holds {
        return format!("{} {}", format_set(h, e), describe(h, &v));
    }
    match classify::is_endo_prime(h, &Hyperideal::trusted(h, e), theta) {
        Ok(v) => format!("{} {}", format_set(h, e), describe(h, &v)),
        Err(err) => err.to_string(),
    }
}

fn why_not_epr(h: &HyperringTable, e: ElemSet, theta: &Morphism) -> String {
    if e == h.carrier() {
        return format!("{} is all of {}", format_set(h, e), h.name());
    }
    match classify::is_endo_primary(h, &Hyperideal::trusted(h, e), theta) {
        Ok(v) => format!("{} {}", format_set(h, e), describe(h, &v)),
        Err(err) => err.to_string(),
    }
}

/// `(E:u)` for every `u`.
fn colons(h: &HyperringTable, e: ElemSet) -> Vec<ElemSet> {
    (0..h.size())
        .map(|u| crate::ideal::colon_elem(h, e, u).expect("callers check the one"))
        .collect()
}

/// Per-structure data shared by the single-structure theorems.
struct Ctx<'a> {
    h: &'a HyperringTable,
    endos: Vec<Morphism<'a>>,
    lattice: Vec<ElemSet>,
    proper: Vec<ElemSet>,
    gate: Option<String>,
    rad: Vec<ElemSet>,
    ep: Vec<Vec<bool>>,
    epr: Vec<Vec<bool>>,
}

impl<'a> Ctx<'a> {
    fn new(entry: &'a CorpusEntry, opts: &SuiteOptions) -> Result<Self> {
        let h = &entry.table;
        let endos = entry
            .endos
            .iter()
            .map(|(name, map)| Morphism::endo(name.clone(), h, map.clone()))
            .collect::<Result<Vec<_>>>()?;
        let lattice: Vec<ElemSet> = enumerate_hyperideals(h).iter().map(|i| i.members()).collect();
        let proper: Vec<ElemSet> = lattice.iter().copied().filter(|&e| e != h.carrier()).collect();
        let gate = one_gate(h, opts);
        let rad = proper.iter().map(|&e| radical(h, e)).collect();
        let (ep_t, epr_t) = if gate.is_none() {
            (
                endos.iter().map(|t| proper.iter().map(|&e| ep(h, e, t)).collect()).collect(),
                endos.iter().map(|t| proper.iter().map(|&e| epr(h, e, t)).collect()).collect(),
            )
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(Ctx {
            h,
            endos,
            lattice,
            proper,
            gate,
            rad,
            ep: ep_t,
            epr: epr_t,
        })
    }

    fn name(&self) -> &str {
        self.h.name()
    }

    fn set(&self, e: ElemSet) -> String {
        format_set(self.h, e)
    }

    /// Runs `f` for every (θ index, proper E index) pair.
    fn grid(&self, mut f: impl FnMut(usize, usize)) {
        for t in 0..self.endos.len() {
            for i in 0..self.proper.len() {
                f(t, i);
            }
        }
    }
}

/// Runs every selected theorem over `corpus`.
pub fn run_suite(corpus: &[CorpusEntry], opts: &SuiteOptions) -> Result<Vec<TheoremReport>> {
    if let Some(only) = &opts.only {
        if let Some(bad) = only.iter().find(|id| !THEOREMS.iter().any(|(t, _)| t == id)) {
            return Err(Error::Precondition(format!("unknown theorem `{bad}`")));
        }
    }
    let ctxs = corpus.iter().map(|e| Ctx::new(e, opts)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (id, title) in THEOREMS {
        if opts.only.as_ref().is_some_and(|o| !o.iter().any(|x| x == id)) {
            continue;
        }
        let start = Instant::now();
        let mut rep = TheoremReport::new(id, title);
        if id == "T14" {
            t14(&ctxs, &mut rep)?;
        } else {
            for c in &ctxs {
                if let Some(reason) = &c.gate {
                    rep.skip(c.name(), reason.clone());
                    continue;
                }
                match id {
                    "T1" => t1(c, &mut rep),
                    "T2" => t2(c, &mut rep),
                    "T3" => t3(c, &mut rep),
                    "T4" => t4(c, &mut rep),
                    "T5" => t5(c, &mut rep),
                    "T6" => t6(c, &mut rep),
                    "T7" => t7(c, &mut rep),
                    "T8" => t8(c, &mut rep),
                    "T9" => t9(c, &mut rep),
                    "T10" => t10(c, &mut rep),
                    "T11" => t11(c, &mut rep)?,
                    "T12" => t12(c, &mut rep)?,
                    "T13" => t13(c, &mut rep, opts)?,
                    "T15" => t15(c, &mut rep),
                    "T16" => t16(c, &mut rep),
                    "T17" => t17(c, &mut rep),
                    "T18" => t18(c, &mut rep),
                    "T19" => t19(c, &mut rep),
                    "T20" => t20(c, &mut rep),
                    _ => unreachable!(),
                }
            }
            if id == "T13" {
                t13_projections(&ctxs, &mut rep)?;
            }
        }
        rep.elapsed = start.elapsed();
        out.push(rep);
    }
    Ok(out)
}

fn t1(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let o = outcome(c.ep[t][i], || {
            let r = c.rad[i];
            (!ep(c.h, r, th)).then(|| format!("rad(E) = {}: {}", c.set(r), why_not_ep(c.h, r, th)))
        });
        rep.record(o, c.name(), vec![c.set(c.proper[i])], vec![th.name().into()]);
    });
}

fn t2(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let o = outcome(c.ep[t][i], || {
            let img = th.image_of(e);
            (!img.is_subset(e)).then(|| format!("θ(E) = {}", c.set(img)))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

/// Distinct proper values of `(E:A)` over non-empty `A ⊆ H`.
fn colon_family(h: &HyperringTable, e: ElemSet) -> Vec<ElemSet> {
    let mut seen: BTreeSet<u128> = colons(h, e).into_iter().map(|s| s.bits()).collect();
    loop {
        let cur: Vec<u128> = seen.iter().copied().collect();
        let before = seen.len();
        for (i, &a) in cur.iter().enumerate() {
            for &b in &cur[i + 1..] {
                seen.insert(a & b);
            }
        }
        if seen.len() == before {
            break;
        }
    }
    let mut v: Vec<ElemSet> = seen.into_iter().map(ElemSet::from_bits).filter(|&s| s != h.carrier()).collect();
    v.sort_by(|a, b| a.canonical_cmp(*b));
    v
}

fn t3(c: &Ctx, rep: &mut TheoremReport) {
    let h = c.h;
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let o = outcome(c.ep[t][i], || {
            let pre = th.preimage_of(e);
            if !ep(h, pre, th) {
                return Some(format!("(1) θ⁻¹(E) = {}: {}", c.set(pre), why_not_ep(h, pre, th)));
            }
            for a in colon_family(h, e) {
                if !ep(h, a, th) {
                    return Some(format!("(2) (E:A) = {}: {}", c.set(a), why_not_ep(h, a, th)));
                }
            }
            let rad = c.rad[i];
            if let Some(u) = rad.iter().find(|&u| !e.contains(th.apply(u))) {
                return Some(format!("(3) {} has a power in E but θ({0}) = {}", h.label(u), h.label(th.apply(u))));
            }
            let bad = (0..h.size()).find(|&u| rad.contains(th.apply(u)) && !e.contains(th.apply(th.apply(u))));
            bad.map(|u| {
                format!(
                    "(4) θ({}) has a power in E but θ²({0}) = {}",
                    h.label(u),
                    h.label(th.apply(th.apply(u)))
                )
            })
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t4(c: &Ctx, rep: &mut TheoremReport) {
    let h = c.h;
    let one = h.one().expect("gated");
    let mut reduced = ElemSet::EMPTY;
    let mut buf = vec![0; h.n()];
    for_each_tuple::<()>(h.size(), h.n(), |t| {
        for i in 0..t.len() {
            buf.copy_from_slice(t);
            buf[i] = one;
            reduced.insert(h.mul(&buf));
        }
        std::ops::ControlFlow::Continue(())
    });
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let cols = colons(h, e);
        let c1 = c.ep[t][i];
        let c2 = (0..h.size())
            .all(|u| ideal_closure(h, ElemSet::singleton(u)).members().is_subset(e) || th.image_of(cols[u]).is_subset(e));
        let c3 = classify::is_strongly_endo_prime(h, &Hyperideal::trusted(h, e), th).is_ok_and(|v| v.holds);
        let c4 = reduced.iter().all(|x| e.contains(th.apply(x)) || cols[x] == e);
        let o = outcome(true, || {
            (!(c1 == c2 && c2 == c3 && c3 == c4)).then(|| format!("(1) {c1}, (2) {c2}, (3) {c3}, (4) {c4}"))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

/// Maximal chains of `sets` under inclusion, each listed bottom-up.
fn maximal_chains(sets: &[ElemSet]) -> Vec<Vec<ElemSet>> {
    let below = |a: ElemSet, b: ElemSet| a != b && a.is_subset(b);
    let covers = |a: ElemSet| -> Vec<ElemSet> {
        sets.iter()
            .copied()
            .filter(|&b| below(a, b) && !sets.iter().any(|&m| below(a, m) && below(m, b)))
            .collect()
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<ElemSet>> = sets
        .iter()
        .filter(|&&a| !sets.iter().any(|&b| below(b, a)))
        .map(|&a| vec![a])
        .collect();
    stack.reverse();
    while let Some(chain) = stack.pop() {
        let up = covers(*chain.last().expect("chains are non-empty"));
        if up.is_empty() {
            out.push(chain);
        } else {
            for &b in up.iter().rev() {
                let mut next = chain.clone();
                next.push(b);
                stack.push(next);
            }
        }
    }
    out
}

fn t5(c: &Ctx, rep: &mut TheoremReport) {
    for (t, th) in c.endos.iter().enumerate() {
        let eps: Vec<ElemSet> = (0..c.proper.len()).filter(|&i| c.ep[t][i]).map(|i| c.proper[i]).collect();
        let mut chains = maximal_chains(&c.proper);
        for ch in maximal_chains(&eps) {
            if !chains.contains(&ch) {
                chains.push(ch);
            }
        }
        for ch in chains {
            let hyp = ch.iter().all(|&e| eps.contains(&e));
            let o = outcome(hyp, || {
                let meet = ch.iter().fold(c.h.carrier(), |acc, &e| acc.intersection(e));
                (!ep(c.h, meet, th)).then(|| why_not_ep(c.h, meet, th))
            });
            rep.record(o, c.name(), ch.iter().map(|&e| c.set(e)).collect(), vec![th.name().into()]);
        }
    }
}

fn t6(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let mins = minimal_primes_over(c.h, e);
        if mins.is_empty() {
            rep.record(Outcome::Vacuous, c.name(), vec![c.set(e)], vec![th.name().into()]);
        }
        for q in mins {
            let q = q.members();
            let o = outcome(c.ep[t][i], || {
                let tq = th.image_of(q);
                let te = th.image_of(e);
                if !tq.is_subset(e) {
                    Some(format!("θ(Q) = {} is not inside E", c.set(tq)))
                } else if !(te.is_subset(tq) && e.is_subset(q)) {
                    Some(format!("θ(E) = {} ⊆ θ(Q) = {} ⊆ E ⊆ Q fails", c.set(te), c.set(tq)))
                } else {
                    None
                }
            });
            rep.record(o, c.name(), vec![c.set(e), c.set(q)], vec![th.name().into()]);
        }
    });
}

fn t7(c: &Ctx, rep: &mut TheoremReport) {
    let primes: Vec<ElemSet> = c.proper.iter().copied().filter(|&q| prime(c.h, q)).collect();
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let hyp = primes.iter().all(|&q| th.image_of(q) == q);
        let o = outcome(hyp, || {
            let p = primes.contains(&e);
            (c.ep[t][i] != p).then(|| format!("Endo-prime {} but prime {}", c.ep[t][i], p))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t8(c: &Ctx, rep: &mut TheoremReport) {
    let nil = nilpotents(c.h);
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let o = outcome(c.ep[t][i], || {
            let tr = th.image_of(c.rad[i]);
            let tn = th.image_of(nil);
            if !tr.is_subset(e) {
                Some(format!("θ(rad E) = {}", c.set(tr)))
            } else if !tn.is_subset(e) {
                Some(format!("θ(nilpotents) = {}", c.set(tn)))
            } else {
                None
            }
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t9(c: &Ctx, rep: &mut TheoremReport) {
    for eta in &c.endos {
        for (t, th) in c.endos.iter().enumerate() {
            let comm = commutes(eta, th, th).unwrap_or(false);
            for i in 0..c.proper.len() {
                let e = c.proper[i];
                let o = outcome(comm && c.ep[t][i], || {
                    let pre = eta.preimage_of(e);
                    (!ep(c.h, pre, th)).then(|| format!("η⁻¹(E) = {}: {}", c.set(pre), why_not_ep(c.h, pre, th)))
                });
                rep.record(o, c.name(), vec![c.set(e)], vec![format!("η={}", eta.name()), format!("θ={}", th.name())]);
            }
        }
    }
}

fn t10(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let o = outcome(c.ep[t][i], || {
            let k = kernel(th);
            (!k.is_subset(e)).then(|| format!("Ker θ = {}", c.set(k)))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t11(c: &Ctx, rep: &mut TheoremReport) -> Result<()> {
    let domain = classify::is_hyperintegral_domain(c.h)?.holds;
    for (t, th) in c.endos.iter().enumerate() {
        let eps: Vec<ElemSet> = (0..c.proper.len()).filter(|&i| c.ep[t][i]).map(|i| c.proper[i]).collect();
        let meet_over = |e: ElemSet| {
            eps.iter()
                .filter(|&&q| e.is_subset(q))
                .fold(c.h.carrier(), |acc, &q| acc.intersection(q))
        };
        let o = outcome(domain, || {
            let nil = theta_nilpotents(c.h, th);
            let meet = meet_over(ElemSet::singleton(c.h.zero()));
            (nil != meet).then(|| format!("Υ_θ = {} but the intersection is {}", c.set(nil), c.set(meet)))
        });
        rep.record(o, c.name(), Vec::new(), vec![th.name().into()]);
        for &e in &c.proper {
            let o = outcome(domain, || {
                let r = theta_radical(c.h, e, th);
                let meet = meet_over(e);
                (r != meet).then(|| format!("rad_θ(E) = {} but the intersection is {}", c.set(r), c.set(meet)))
            });
            rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
        }
    }
    Ok(())
}

fn t12(c: &Ctx, rep: &mut TheoremReport) -> Result<()> {
    let mut quotients: Vec<Option<QuotientStructure>> = Vec::new();
    for &e in &c.proper {
        match construct::quotient(c.h, &Hyperideal::trusted(c.h, e)) {
            Ok(q) => quotients.push(Some(q)),
            Err(err) => {
                rep.skip(c.name(), format!("quotient by {}: {err}", c.set(e)));
                quotients.push(None);
            }
        }
    }
    for (t, th) in c.endos.iter().enumerate() {
        for (i, q) in quotients.iter().enumerate() {
            let Some(q) = q else { continue };
            let e = c.proper[i];
            let ideals = vec![c.set(e)];
            let endos = vec![th.name().to_string()];
            if !th.image_of(e).is_subset(e) {
                rep.record(Outcome::Vacuous, c.name(), ideals, endos);
                continue;
            }
            let te = construct::induced_endo(q, th)?;
            let strongly =
                classify::is_strongly_endo_prime(c.h, &Hyperideal::trusted(c.h, e), th).is_ok_and(|v| v.holds);
            let dom = classify::is_theta_domain(q.table(), &te);
            let dom_holds = dom.as_ref().is_ok_and(|v| v.holds);
            let o = outcome(strongly || dom_holds, || {
                if strongly && !dom_holds {
                    Some(match &dom {
                        Ok(v) => format!("(1) H/E: {}", describe(q.table(), v)),
                        Err(err) => format!("(1) H/E: {err}"),
                    })
                } else if dom_holds && !c.ep[t][i] {
                    Some(format!("(2) {}", why_not_ep(c.h, e, th)))
                } else {
                    None
                }
            });
            rep.record(o, c.name(), ideals, endos);
        }
    }
    Ok(())
}

/// Both parts of the transfer statement for `eta: H1 -> H2` and every
/// commuting pair `θ2 ∘ η = η ∘ θ1`.
fn transfer(
    rep: &mut TheoremReport,
    label: &str,
    eta: &Morphism,
    end1: &[Morphism],
    end2: &[Morphism],
    lat1: &[ElemSet],
    lat2: &[ElemSet],
) {
    let (h1, h2) = (eta.source(), eta.target());
    let ker = kernel(eta);
    let surj = eta.is_surjective();
    for t1 in end1 {
        for t2 in end2 {
            let endos = vec![format!("η={}", eta.name()), format!("θ1={}", t1.name()), format!("θ2={}", t2.name())];
            if !commutes(eta, t1, t2).unwrap_or(false) {
                rep.record(Outcome::Vacuous, label, Vec::new(), endos);
                continue;
            }
            for &e2 in lat2.iter().filter(|&&e| e != h2.carrier()) {
                let o = outcome(ep(h2, e2, t2), || {
                    let pre = eta.preimage_of(e2);
                    (!ep(h1, pre, t1)).then(|| format!("(1) η⁻¹(E2) = {}: {}", format_set(h1, pre), why_not_ep(h1, pre, t1)))
                });
                rep.record(o, label, vec![format_set(h2, e2)], endos.clone());
            }
            for &e1 in lat1.iter().filter(|&&e| e != h1.carrier()) {
                let o = outcome(surj && ker.is_subset(e1) && ep(h1, e1, t1), || {
                    let img = eta.image_of(e1);
                    (!ep(h2, img, t2)).then(|| format!("(2) η(E1) = {}: {}", format_set(h2, img), why_not_ep(h2, img, t2)))
                });
                rep.record(o, label, vec![format_set(h1, e1)], endos.clone());
            }
        }
    }
}

fn lattice_of(h: &HyperringTable) -> Vec<ElemSet> {
    enumerate_hyperideals(h).iter().map(|i| i.members()).collect()
}

/// Proper subhyperrings generated by one or two elements, deduplicated.
fn small_subhyperrings(h: &HyperringTable) -> Vec<ElemSet> {
    let mut found: Vec<ElemSet> = Vec::new();
    for a in 0..h.size() {
        for b in a..h.size() {
            let mut s = ElemSet::singleton(a);
            s.insert(b);
            let g = construct::subhyperring_closure(h, s);
            if g != h.carrier() && !found.contains(&g) {
                found.push(g);
            }
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(*b));
    found
}

fn t13(c: &Ctx, rep: &mut TheoremReport, opts: &SuiteOptions) -> Result<()> {
    let h = c.h;
    for eta in &c.endos {
        transfer(rep, c.name(), eta, &c.endos, &c.endos, &c.lattice, &c.lattice);
    }
    for &e in &c.proper {
        let q = construct::quotient(h, &Hyperideal::trusted(h, e))?;
        let label = format!("{} -> {}", c.name(), q.table().name());
        if let Some(reason) = one_gate(q.table(), opts) {
            rep.skip(&label, reason);
            continue;
        }
        let qend = enumerate_endomorphisms(q.table(), DEFAULT_ENDO_CAP)?;
        transfer(rep, &label, &q.projection(), &c.endos, &qend, &c.lattice, &lattice_of(q.table()));
    }
    for g in small_subhyperrings(h) {
        let sub = construct::subhyperring(h, g, format!("{}|{}", c.name(), c.set(g)))?;
        let label = format!("{} -> {}", sub.name(), c.name());
        if let Some(reason) = one_gate(&sub, opts) {
            rep.skip(&label, reason);
            continue;
        }
        let send = enumerate_endomorphisms(&sub, DEFAULT_ENDO_CAP)?;
        let inc = construct::inclusion(&sub, h, g)?;
        transfer(rep, &label, &inc, &send, &c.endos, &lattice_of(&sub), &c.lattice);

        let members = g.to_vec();
        for (t, th) in c.endos.iter().enumerate() {
            if !th.image_of(g).is_subset(g) {
                continue;
            }
            let (rsub, map) = construct::restrict(h, g, th)?;
            let rth = Morphism::endo(format!("{}|G", th.name()), &rsub, map)?;
            for (i, &e) in c.proper.iter().enumerate() {
                let o = outcome(c.ep[t][i], || {
                    let meet: ElemSet = members.iter().enumerate().filter(|(_, &u)| e.contains(u)).map(|(j, _)| j).collect();
                    (!ep(&rsub, meet, &rth)).then(|| format!("E ∩ G = {}: {}", format_set(&rsub, meet), why_not_ep(&rsub, meet, &rth)))
                });
                rep.record(o, &label, vec![c.set(e)], vec![th.name().into()]);
            }
        }
    }
    for (t, th) in c.endos.iter().enumerate() {
        let k = kernel(th);
        if k == h.carrier() {
            rep.skip(c.name(), format!("Ker {} is all of {}", th.name(), c.name()));
            continue;
        }
        let q = construct::quotient(h, &Hyperideal::trusted(h, k))?;
        let tk = construct::induced_endo(&q, th)?;
        let proj = q.projection();
        for (i, &e) in c.proper.iter().enumerate() {
            let o = outcome(k.is_subset(e), || {
                let img = proj.image_of(e);
                let down = ep(q.table(), img, &tk);
                (c.ep[t][i] != down).then(|| format!("E Endo-prime {} but E/Ker θ = {} Endo-prime {}", c.ep[t][i], format_set(q.table(), img), down))
            });
            rep.record(o, &format!("{} -> {}", c.name(), q.table().name()), vec![c.set(e)], vec![th.name().into()]);
        }
    }
    Ok(())
}

/// A product of several corpus structures with mixed-radix coordinates.
struct Product {
    table: HyperringTable,
    coords: Vec<Vec<Elem>>,
}

impl Product {
    fn build(factors: &[&HyperringTable]) -> Result<Product> {
        let mut table = factors[0].clone();
        for f in &factors[1..] {
            table = construct::product(&table, f)?;
        }
        let coords = (0..table.size())
            .map(|mut e| {
                factors
                    .iter()
                    .map(|f| {
                        let x = e % f.size();
                        e /= f.size();
                        x
                    })
                    .collect()
            })
            .collect();
        Ok(Product { table, coords })
    }

    fn index(&self, factors: &[&HyperringTable], c: &[Elem]) -> Elem {
        let mut idx = 0;
        let mut scale = 1;
        for (f, &x) in factors.iter().zip(c) {
            idx += x * scale;
            scale *= f.size();
        }
        idx
    }

    /// The product endomorphisms over every choice of factor endomorphisms.
    fn endos<'p>(&'p self, factors: &[&HyperringTable], ends: &[&[Morphism]]) -> Result<Vec<Morphism<'p>>> {
        let mut out = Vec::new();
        let counts: Vec<usize> = ends.iter().map(|e| e.len()).collect();
        if counts.contains(&0) {
            return Ok(out);
        }
        let mut pick = vec![0usize; ends.len()];
        loop {
            let chosen: Vec<&Morphism> = pick.iter().zip(ends).map(|(&i, e)| &e[i]).collect();
            let map = self
                .coords
                .iter()
                .map(|c| {
                    let img: Vec<Elem> = c.iter().zip(&chosen).map(|(&x, t)| t.apply(x)).collect();
                    self.index(factors, &img)
                })
                .collect();
            let name = chosen.iter().map(|t| t.name()).collect::<Vec<_>>().join("x");
            out.push(Morphism::endo(name, &self.table, map)?);
            let mut k = 0;
            loop {
                if k == pick.len() {
                    return Ok(out);
                }
                pick[k] += 1;
                if pick[k] < counts[k] {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
        }
    }
}

/// Index tuples of gated structures with one signature and a small product.
fn groups(ctxs: &[Ctx], arity: usize, cap: usize) -> Vec<Vec<usize>> {
    let ok: Vec<usize> = (0..ctxs.len()).filter(|&i| ctxs[i].gate.is_none()).collect();
    let mut out = Vec::new();
    for_each_tuple::<()>(ok.len(), arity, |idx| {
        let g: Vec<usize> = idx.iter().map(|&i| ok[i]).collect();
        let sig = (ctxs[g[0]].h.m(), ctxs[g[0]].h.n());
        let size: usize = g.iter().map(|&i| ctxs[i].h.size()).product();
        let work = size.checked_pow(sig.1 as u32).unwrap_or(usize::MAX);
        if size <= cap && work <= PRODUCT_WORK_CAP && g.iter().all(|&i| (ctxs[i].h.m(), ctxs[i].h.n()) == sig) {
            out.push(g);
        }
        std::ops::ControlFlow::Continue(())
    });
    out
}

fn t13_projections(ctxs: &[Ctx], rep: &mut TheoremReport) -> Result<()> {
    for g in groups(ctxs, 2, PAIR_PRODUCT_CAP) {
        let factors: Vec<&HyperringTable> = g.iter().map(|&i| ctxs[i].h).collect();
        let prod = Product::build(&factors)?;
        let ends: Vec<&[Morphism]> = g.iter().map(|&i| ctxs[i].endos.as_slice()).collect();
        let pend = prod.endos(&factors, &ends)?;
        let plat = lattice_of(&prod.table);
        for (which, &i) in g.iter().enumerate() {
            let map = prod.coords.iter().map(|c| c[which]).collect();
            let pi = Morphism::new(format!("pi{}", which + 1), &prod.table, ctxs[i].h, map)?;
            let label = format!("{} -> {}", prod.table.name(), ctxs[i].name());
            transfer(rep, &label, &pi, &pend, &ctxs[i].endos, &plat, &ctxs[i].lattice);
        }
    }
    Ok(())
}

fn t14(ctxs: &[Ctx], rep: &mut TheoremReport) -> Result<()> {
    for c in ctxs {
        if let Some(reason) = &c.gate {
            rep.skip(c.name(), reason.clone());
        }
    }
    let mut all = groups(ctxs, 2, PAIR_PRODUCT_CAP);
    all.extend(groups(ctxs, 3, TRIPLE_PRODUCT_CAP));
    for g in all {
        let factors: Vec<&HyperringTable> = g.iter().map(|&i| ctxs[i].h).collect();
        let prod = Product::build(&factors)?;
        let ends: Vec<&[Morphism]> = g.iter().map(|&i| ctxs[i].endos.as_slice()).collect();
        let pend = prod.endos(&factors, &ends)?;
        let plat = lattice_of(&prod.table);
        let mut pick = vec![0usize; g.len()];
        for th in &pend {
            for &e in plat.iter().filter(|&&e| e != prod.table.carrier()) {
                let lhs = ep(&prod.table, e, th);
                let proj: Vec<ElemSet> = (0..g.len())
                    .map(|j| e.iter().map(|x| prod.coords[x][j]).collect())
                    .collect();
                let boxed = proj.iter().map(|p| p.len()).product::<usize>() == e.len();
                let narrow: Vec<usize> = (0..g.len()).filter(|&j| proj[j] != factors[j].carrier()).collect();
                let rhs = boxed
                    && narrow.len() == 1
                    && ep(factors[narrow[0]], proj[narrow[0]], &ends[narrow[0]][pick[narrow[0]]]);
                let o = outcome(true, || {
                    (lhs != rhs).then(|| {
                        let parts: Vec<String> = (0..g.len()).map(|j| format_set(factors[j], proj[j])).collect();
                        format!("Endo-prime {lhs} but product form {rhs} (projections {})", parts.join(" "))
                    })
                });
                rep.record(o, prod.table.name(), vec![format_set(&prod.table, e)], vec![th.name().into()]);
            }
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < ends[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
        }
    }
    Ok(())
}

fn t15(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let o = outcome(c.epr[t][i], || {
            let r = c.rad[i];
            (!ep(c.h, r, th)).then(|| format!("rad(E) = {}: {}", c.set(r), why_not_ep(c.h, r, th)))
        });
        rep.record(o, c.name(), vec![c.set(c.proper[i])], vec![th.name().into()]);
    });
}

fn t16(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let (e, r) = (c.proper[i], c.rad[i]);
        let o = outcome(c.epr[t][i], || {
            let img = th.image_of(e);
            if !img.is_subset(r) {
                return Some(format!("θ(E) = {} is not inside rad(E) = {}", c.set(img), c.set(r)));
            }
            r.iter()
                .find(|&u| !e.contains(u) && !r.contains(th.apply(u)))
                .map(|u| format!("{} has a power in E, is not in E, and θ({0}) = {} ∉ rad(E)", c.h.label(u), c.h.label(th.apply(u))))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t17(c: &Ctx, rep: &mut TheoremReport) {
    let zero = ElemSet::singleton(c.h.zero());
    if zero == c.h.carrier() {
        rep.skip(c.name(), "the zero hyperideal is not proper");
        return;
    }
    let max: Vec<ElemSet> = max_spectrum(c.h).iter().map(|m| m.members()).collect();
    for th in &c.endos {
        let k = kernel(th);
        let lhs = classify::is_theta_maximal(c.h, &Hyperideal::trusted(c.h, zero), th).is_ok_and(|v| v.holds);
        let rhs = max == [k];
        let o = outcome(true, || {
            (lhs != rhs).then(|| {
                let ms: Vec<String> = max.iter().map(|&m| c.set(m)).collect();
                format!("{{0}} θ-maximal {lhs} but Max(H) = [{}] and Ker θ = {}", ms.join(" "), c.set(k))
            })
        });
        rep.record(o, c.name(), Vec::new(), vec![th.name().into()]);
    }
}

/// Subfamilies of size at least two of each equal-radical group in `sets`.
fn radical_families(c: &Ctx, sets: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seen: Vec<ElemSet> = Vec::new();
    for &i in sets {
        if seen.contains(&c.rad[i]) {
            continue;
        }
        seen.push(c.rad[i]);
        let group: Vec<usize> = sets.iter().copied().filter(|&j| c.rad[j] == c.rad[i]).take(GROUP_CAP).collect();
        for mask in 1u32..(1 << group.len()) {
            if mask.count_ones() >= 2 {
                out.push((0..group.len()).filter(|b| mask >> b & 1 == 1).map(|b| group[b]).collect());
            }
        }
    }
    out
}

fn t18(c: &Ctx, rep: &mut TheoremReport) {
    let meet = |fam: &[usize]| fam.iter().fold(c.h.carrier(), |acc, &i| acc.intersection(c.proper[i]));
    for (t, th) in c.endos.iter().enumerate() {
        let eprs: Vec<usize> = (0..c.proper.len()).filter(|&i| c.epr[t][i]).collect();
        for fam in radical_families(c, &eprs) {
            let m = meet(&fam);
            let o = outcome(true, || (!epr(c.h, m, th)).then(|| why_not_epr(c.h, m, th)));
            rep.record(o, c.name(), fam.iter().map(|&i| c.set(c.proper[i])).collect(), vec![th.name().into()]);
        }
    }
    let prims: Vec<usize> = (0..c.proper.len()).filter(|&i| primary(c.h, c.proper[i])).collect();
    for fam in radical_families(c, &prims) {
        let m = meet(&fam);
        let o = outcome(true, || (!primary(c.h, m)).then(|| format!("the intersection {} is not primary", c.set(m))));
        rep.record(o, c.name(), fam.iter().map(|&i| c.set(c.proper[i])).collect(), Vec::new());
    }
}

fn t19(c: &Ctx, rep: &mut TheoremReport) {
    c.grid(|t, i| {
        let th = &c.endos[t];
        let (e, q) = (c.proper[i], c.rad[i]);
        let o = outcome(c.epr[t][i], || {
            let cols = colons(c.h, e);
            if let Some(u) = e.iter().find(|&u| cols[u] != c.h.carrier()) {
                return Some(format!("(1) (E:{}) = {}", c.h.label(u), c.set(cols[u])));
            }
            (0..c.h.size())
                .find(|&u| !q.contains(th.apply(u)) && cols[u] != e)
                .map(|u| format!("(2) θ({}) ∉ rad(E) but (E:{0}) = {}", c.h.label(u), c.set(cols[u])))
        });
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

fn t20(c: &Ctx, rep: &mut TheoremReport) {
    let tmax = |m: ElemSet, th: &Morphism| {
        m != c.h.carrier() && classify::is_theta_maximal(c.h, &Hyperideal::trusted(c.h, m), th).is_ok_and(|v| v.holds)
    };
    c.grid(|t, i| {
        let th = &c.endos[t];
        let e = c.proper[i];
        let o = outcome(tmax(e, th), || (!c.ep[t][i]).then(|| format!("(1) {}", why_not_ep(c.h, e, th))));
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
        let o = outcome(tmax(c.rad[i], th), || (!c.epr[t][i]).then(|| format!("(2) {}", why_not_epr(c.h, e, th))));
        rep.record(o, c.name(), vec![c.set(e)], vec![th.name().into()]);
    });
}

/// Properties targeted by [`search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchProperty {
    EndoPrimeNotPrime,
    ThetaStableNotEndoPrime,
    EndoPrimaryNotEndoPrime,
}

impl SearchProperty {
    pub const ALL: [SearchProperty; 3] = [
        SearchProperty::EndoPrimeNotPrime,
        SearchProperty::ThetaStableNotEndoPrime,
        SearchProperty::EndoPrimaryNotEndoPrime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SearchProperty::EndoPrimeNotPrime => "endo-prime-not-prime",
            SearchProperty::ThetaStableNotEndoPrime => "theta-stable-not-endo-prime",
            SearchProperty::EndoPrimaryNotEndoPrime => "endo-primary-not-endo-prime",
        }
    }

    pub fn parse(s: &str) -> Result<SearchProperty> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown property `{s}`")))
    }
}

/// One (structure, hyperideal, endomorphism) triple found by [`search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub structure: String,
    pub ideal: String,
    pub endo: String,
}

/// Every instance of `property` in the corpus, in corpus, endomorphism and
/// lattice order. The declared one is used as given; structures without one
/// are passed over.
pub fn search(corpus: &[CorpusEntry], property: SearchProperty) -> Result<Vec<Found>> {
    let mut out = Vec::new();
    for entry in corpus {
        let h = &entry.table;
        if h.one().is_none() {
            continue;
        }
        let lattice = lattice_of(h);
        for (name, map) in &entry.endos {
            let th = Morphism::endo(name.clone(), h, map.clone())?;
            for &e in lattice.iter().filter(|&&e| e != h.carrier()) {
                let hit = match property {
                    SearchProperty::EndoPrimeNotPrime => ep(h, e, &th) && !prime(h, e),
                    SearchProperty::ThetaStableNotEndoPrime => th.image_of(e).is_subset(e) && !ep(h, e, &th),
                    SearchProperty::EndoPrimaryNotEndoPrime => epr(h, e, &th) && !ep(h, e, &th),
                };
                if hit {
                    out.push(Found {
                        structure: h.name().to_string(),
                        ideal: format_set(h, e),
                        endo: name.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn entry(t: HyperringTable) -> CorpusEntry {
        CorpusEntry::enumerated(t, &[]).unwrap()
    }

    #[test]
    fn p_alone_has_no_violations() {
        let reports = run_suite(&[entry(fixtures::p())], &SuiteOptions::default()).unwrap();
        assert_eq!(reports.len(), 20);
        for r in &reports {
            assert_eq!(r.violated, 0, "{}", r.render(5));
            assert_eq!(r.checked, r.passed + r.vacuous + r.violated);
        }
    }

    #[test]
    fn s4_is_skipped_with_a_note() {
        let reports = run_suite(&[entry(fixtures::s4())], &SuiteOptions::default()).unwrap();
        let t1 = &reports[0];
        assert_eq!(t1.checked, 0);
        assert!(t1.skips[0].reason.contains("not a scalar identity"));
        let literal = SuiteOptions {
            literal_one: true,
            ..Default::default()
        };
        let reports = run_suite(&[entry(fixtures::s4())], &literal).unwrap();
        assert!(reports.iter().all(|r| r.skips.is_empty()));
    }

    #[test]
    fn only_filter_and_unknown_ids() {
        let opts = SuiteOptions {
            only: Some(vec!["T2".into(), "T10".into()]),
            ..Default::default()
        };
        let reports = run_suite(&[entry(fixtures::g())], &opts).unwrap();
        assert_eq!(reports.iter().map(|r| r.id).collect::<Vec<_>>(), ["T2", "T10"]);
        let bad = SuiteOptions {
            only: Some(vec!["T99".into()]),
            ..Default::default()
        };
        assert!(run_suite(&[], &bad).is_err());
    }

    #[test]
    fn search_examples() {
        let s4 = entry(fixtures::s4());
        let found = search(std::slice::from_ref(&s4), SearchProperty::EndoPrimeNotPrime).unwrap();
        for (name, _) in &s4.endos {
            assert!(found.iter().any(|f| f.ideal == "{0}" && f.endo == *name));
        }
        assert!(found.iter().all(|f| f.ideal == "{0}" || f.ideal == "{0,2}"));
        assert!(search(&[entry(fixtures::p())], SearchProperty::EndoPrimeNotPrime).unwrap().is_empty());
        let pp = fixtures::p_squared();
        let swap = fixtures::swap(&pp).map().to_vec();
        let e = CorpusEntry::new(pp, vec![("swap".into(), swap)]);
        let found = search(&[e], SearchProperty::ThetaStableNotEndoPrime).unwrap();
        assert_eq!(found[0].ideal, "{(0,0)}");
        assert_eq!(found[0].endo, "swap");
    }

    #[test]
    fn chains_of_a_diamond() {
        let s = |b: u128| ElemSet::from_bits(b);
        let chains = maximal_chains(&[s(1), s(3), s(5), s(15)]);
        assert_eq!(chains, vec![vec![s(1), s(3), s(15)], vec![s(1), s(5), s(15)]]);
    }
}
