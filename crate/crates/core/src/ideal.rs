//! Hyperideals: recognition, closure, enumeration, colon ideals, radicals and
//! maximality.

use std::fmt;
use std::ops::ControlFlow;

use crate::classify;
use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::format::{format_set, format_tuple, parse_set};
use crate::morphism::Morphism;
use crate::table::HyperringTable;
use crate::verdict::{Kind, Verdict, Witness};

/// A subset of a hyperring's carrier known to be a hyperideal.
#[derive(Clone, Copy)]
pub struct Hyperideal<'a> {
    parent: &'a HyperringTable,
    members: ElemSet,
}

pub(crate) fn same_table(a: &HyperringTable, b: &HyperringTable) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'a> Hyperideal<'a> {
    /// Checks `members` and wraps it; the error names the failing tuple.
    pub fn new(parent: &'a HyperringTable, members: ElemSet) -> Result<Self> {
        let v = is_hyperideal(parent, members);
        if let Some(w) = v.witness {
            let tuple = w.elements().map(|t| format_tuple(parent, t)).unwrap_or_default();
            return Err(Error::Precondition(format!(
                "{} is not a hyperideal: {} {tuple}",
                format_set(parent, members),
                w.note()
            )));
        }
        Ok(Hyperideal { parent, members })
    }

    pub(crate) fn trusted(parent: &'a HyperringTable, members: ElemSet) -> Self {
        debug_assert!(is_hyperideal(parent, members).holds);
        Hyperideal { parent, members }
    }

    pub fn zero(parent: &'a HyperringTable) -> Self {
        Hyperideal::trusted(parent, ElemSet::singleton(parent.zero()))
    }

    pub fn whole(parent: &'a HyperringTable) -> Self {
        Hyperideal::trusted(parent, parent.carrier())
    }

    pub fn parent(&self) -> &'a HyperringTable {
        self.parent
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, u: Elem) -> bool {
        self.members.contains(u)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        self.members != self.parent.carrier()
    }

    pub fn is_subset(&self, other: &Hyperideal) -> bool {
        self.members.is_subset(other.members)
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::NotProper)
        }
    }

    pub fn intersection(&self, other: &Hyperideal) -> Hyperideal<'a> {
        Hyperideal::trusted(self.parent, self.members.intersection(other.members))
    }

    /// The smallest hyperideal containing both.
    pub fn join(&self, other: &Hyperideal) -> Hyperideal<'a> {
        ideal_closure(self.parent, self.members.union(other.members))
    }
}

impl PartialEq for Hyperideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_table(self.parent, other.parent)
    }
}

impl Eq for Hyperideal<'_> {}

impl fmt::Debug for Hyperideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(self.parent, self.members))
    }
}

impl fmt::Display for Hyperideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(self.parent, self.members))
    }
}

/// Parses a comma-separated label list and checks it is a hyperideal.
pub fn parse_ideal<'a>(parent: &'a HyperringTable, text: &str) -> Result<Hyperideal<'a>> {
    Hyperideal::new(parent, parse_set(parent, text)?)
}

/// Checks zero membership, closure under `h` and inverses, and absorption in
/// every position. The witness is the first failing tuple of the first
/// failing condition.
pub fn is_hyperideal(h: &HyperringTable, s: ElemSet) -> Verdict {
    let fail = |t: Vec<Elem>, pos: Option<usize>, note: &str| Verdict::fail(Kind::Hyperideal, Witness::tuple(t, pos, note));
    if !s.is_subset(h.carrier()) {
        let bad = s.difference(h.carrier()).first().unwrap();
        return fail(vec![bad], None, "not an element");
    }
    if !s.contains(h.zero()) {
        return fail(vec![h.zero()], None, "zero is missing");
    }
    let members = s.to_vec();
    let add_fail = for_each_tuple(members.len(), h.m(), |idx| {
        let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
        if h.add(&t).is_subset(s) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(t)
        }
    });
    if let Some(t) = add_fail {
        return fail(t, None, "sum leaves the set:");
    }
    for u in s.iter() {
        match h.inverse(u) {
            Some(v) if s.contains(v) => {}
            _ => return fail(vec![u], None, "inverse leaves the set:"),
        }
    }
    let mul_fail = for_each_tuple(h.size(), h.n(), |t| {
        match t.iter().position(|&u| s.contains(u)) {
            Some(i) if !s.contains(h.mul(t)) => ControlFlow::Break((t.to_vec(), i + 1)),
            _ => ControlFlow::Continue(()),
        }
    });
    if let Some((t, i)) = mul_fail {
        return fail(t, Some(i), "product leaves the set:");
    }
    Verdict::pass(Kind::Hyperideal)
}

/// The smallest hyperideal containing `s`.
pub fn ideal_closure(h: &HyperringTable, s: ElemSet) -> Hyperideal<'_> {
    let mut cur = s.intersection(h.carrier());
    cur.insert(h.zero());
    loop {
        let before = cur;
        for u in cur.iter() {
            if let Some(v) = h.inverse(u) {
                cur.insert(v);
            }
        }
        let members = cur.to_vec();
        for_each_tuple::<()>(members.len(), h.m(), |idx| {
            let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
            cur = cur.union(h.add(&t));
            ControlFlow::Continue(())
        });
        let snapshot = cur;
        for_each_tuple::<()>(h.size(), h.n(), |t| {
            if t.iter().any(|&u| snapshot.contains(u)) {
                cur.insert(h.mul(t));
            }
            ControlFlow::Continue(())
        });
        if cur == before {
            return Hyperideal::trusted(h, cur);
        }
    }
}

fn sort_ideals(ideals: &mut [Hyperideal]) {
    ideals.sort_by(|a, b| a.members.canonical_cmp(b.members));
}

/// Every hyperideal, ordered by cardinality and then by sorted member list.
///
/// Starts from the closures of single elements and adds joins until nothing
/// new appears.
pub fn enumerate_hyperideals(h: &HyperringTable) -> Vec<Hyperideal<'_>> {
    let mut found: Vec<ElemSet> = Vec::new();
    for u in 0..h.size() {
        let c = ideal_closure(h, ElemSet::singleton(u)).members;
        if !found.contains(&c) {
            found.push(c);
        }
    }
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for b in found.clone() {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let c = ideal_closure(h, a.union(b)).members;
                if !found.contains(&c) {
                    found.push(c);
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Hyperideal> = found.into_iter().map(|s| Hyperideal { parent: h, members: s }).collect();
    sort_ideals(&mut out);
    if cfg!(debug_assertions) && h.size() <= 12 {
        let brute: Vec<ElemSet> = (0u128..1 << h.size())
            .map(ElemSet::from_bits)
            .filter(|&s| is_hyperideal(h, s).holds)
            .collect();
        debug_assert_eq!(brute.len(), out.len(), "hyperideal enumeration is incomplete");
    }
    out
}

/// The generated set `k(u, H, 1^(n-2))` and, when that set is not a
/// hyperideal, a warning saying so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Principal {
    pub members: ElemSet,
    pub warning: Option<String>,
}

pub fn principal(h: &HyperringTable, u: Elem) -> Result<Principal> {
    let one = h.require_one("principal")?;
    h.check_tuple(&[u], 1)?;
    let mut t = vec![one; h.n()];
    t[0] = u;
    let mut members = ElemSet::EMPTY;
    for v in 0..h.size() {
        t[1] = v;
        members.insert(h.mul(&t));
    }
    let verdict = is_hyperideal(h, members);
    let warning = verdict.witness.map(|w| {
        format!(
            "the generated set {} of {} is not a hyperideal ({} {})",
            format_set(h, members),
            h.label(u),
            w.note(),
            w.elements().map(|t| format_tuple(h, t)).unwrap_or_default()
        )
    });
    Ok(Principal { members, warning })
}

/// `(I:u) = {v : k(u, v, 1^(n-2)) ∈ I}`.
pub fn colon_elem(h: &HyperringTable, ideal: ElemSet, u: Elem) -> Result<ElemSet> {
    let one = h.require_one("colon")?;
    h.check_tuple(&[u], 1)?;
    let mut t = vec![one; h.n()];
    t[0] = u;
    Ok((0..h.size())
        .filter(|&v| {
            t[1] = v;
            ideal.contains(h.mul(&t))
        })
        .collect())
}

/// `(I:A)`, the intersection of `(I:u)` over `u ∈ A`; `H` for empty `A`.
pub fn colon(h: &HyperringTable, ideal: &Hyperideal, a: ElemSet) -> Result<ElemSet> {
    h.require_one("colon")?;
    let mut out = h.carrier();
    for u in a.iter() {
        out = out.intersection(colon_elem(h, ideal.members, u)?);
    }
    Ok(out)
}

/// Elements with some valid power in `ideal`. Without a declared one only
/// the exponents `l(n-1)+1` take part.
pub fn radical(h: &HyperringTable, ideal: ElemSet) -> ElemSet {
    (0..h.size()).filter(|&u| h.power_sequence_members(u, ideal)).collect()
}

/// The note attached to radical results on structures without a one.
pub fn radical_note(h: &HyperringTable) -> Option<&'static str> {
    h.one().is_none().then_some("no one declared; only exponents l(n-1)+1 were used")
}

/// The prime hyperideals of `h`, in enumeration order.
pub fn primes(h: &HyperringTable) -> Vec<Hyperideal<'_>> {
    enumerate_hyperideals(h)
        .into_iter()
        .filter(|q| q.is_proper() && classify::is_prime(h, q).is_ok_and(|v| v.holds))
        .collect()
}

/// The intersection of the primes containing `ideal`, or `H` when none does.
pub fn prime_radical(h: &HyperringTable, ideal: ElemSet) -> ElemSet {
    primes(h)
        .iter()
        .filter(|q| ideal.is_subset(q.members))
        .fold(h.carrier(), |acc, q| acc.intersection(q.members))
}

/// Elements some valid power of which `θ` sends into `e`.
pub fn theta_radical(h: &HyperringTable, e: ElemSet, theta: &Morphism) -> ElemSet {
    (0..h.size())
        .filter(|&u| h.power_sequence_hits(u, |p| e.contains(theta.apply(p))))
        .collect()
}

pub fn nilpotents(h: &HyperringTable) -> ElemSet {
    radical(h, ElemSet::singleton(h.zero()))
}

pub fn theta_nilpotents(h: &HyperringTable, theta: &Morphism) -> ElemSet {
    theta_radical(h, ElemSet::singleton(h.zero()), theta)
}

/// Whether no hyperideal lies strictly between `ideal` and `H`.
pub fn is_maximal(h: &HyperringTable, ideal: &Hyperideal) -> Result<bool> {
    ideal.require_proper()?;
    Ok(!enumerate_hyperideals(h)
        .iter()
        .any(|e| e.is_proper() && ideal.members.is_subset(e.members) && e.members != ideal.members))
}

/// `Max(H)`, in enumeration order.
pub fn max_spectrum(h: &HyperringTable) -> Vec<Hyperideal<'_>> {
    let all = enumerate_hyperideals(h);
    all.iter()
        .filter(|i| {
            i.is_proper()
                && !all
                    .iter()
                    .any(|e| e.is_proper() && i.members.is_subset(e.members) && e.members != i.members)
        })
        .copied()
        .collect()
}

/// Whether `u` has `v` with `k(u, v, 1^(n-2)) = 1`.
pub fn is_invertible(h: &HyperringTable, u: Elem) -> Result<bool> {
    let one = h.require_one("is_invertible")?;
    h.check_tuple(&[u], 1)?;
    let mut t = vec![one; h.n()];
    t[0] = u;
    Ok((0..h.size()).any(|v| {
        t[1] = v;
        h.mul(&t) == one
    }))
}

/// Primes containing `e` that contain no smaller such prime.
pub fn minimal_primes_over<'a>(h: &'a HyperringTable, e: ElemSet) -> Vec<Hyperideal<'a>> {
    let over: Vec<Hyperideal> = primes(h).into_iter().filter(|q| e.is_subset(q.members)).collect();
    over.iter()
        .filter(|q| !over.iter().any(|r| r.members != q.members && r.members.is_subset(q.members)))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(h: &HyperringTable, text: &str) -> ElemSet {
        parse_set(h, text).unwrap()
    }

    #[test]
    fn recognition_on_s4() {
        let s4 = fixtures::s4();
        assert!(is_hyperideal(&s4, set(&s4, "0,1")).holds);
        let v = is_hyperideal(&s4, set(&s4, "0,3"));
        assert!(!v.holds);
        assert_eq!(v.witness_tuple(), Some(&[3, 3][..]));
        assert!(is_hyperideal(&s4, set(&s4, "0")).holds);
        assert!(!is_hyperideal(&s4, set(&s4, "1")).holds);
    }

    #[test]
    fn closures() {
        let s4 = fixtures::s4();
        assert_eq!(ideal_closure(&s4, ElemSet::EMPTY).members(), set(&s4, "0"));
        assert_eq!(ideal_closure(&s4, set(&s4, "2")).members(), set(&s4, "0,2"));
        assert_eq!(ideal_closure(&s4, set(&s4, "3")).members(), s4.carrier());
    }

    #[test]
    fn lattices() {
        let s4 = fixtures::s4();
        let got: Vec<_> = enumerate_hyperideals(&s4).iter().map(|i| i.members()).collect();
        assert_eq!(got, ["0", "0,1", "0,2", "0,1,2,3"].map(|t| set(&s4, t)));
        let p = fixtures::p();
        assert_eq!(enumerate_hyperideals(&p).len(), 2);
        let pp = fixtures::p_squared();
        let got: Vec<_> = enumerate_hyperideals(&pp).iter().map(|i| i.members()).collect();
        assert_eq!(got.len(), 4);
        assert_eq!(got[1], set(&pp, "(0,0),(1,0),(u,0),(v,0),(w,0)"));
        assert_eq!(got[2], set(&pp, "(0,0),(0,1),(0,u),(0,v),(0,w)"));
    }

    #[test]
    fn principal_sets() {
        let p = fixtures::p();
        let u = p.elem("u").unwrap();
        assert_eq!(principal(&p, u).unwrap().members, p.carrier());
        assert_eq!(principal(&p, 0).unwrap().members, set(&p, "0"));
        let s4 = fixtures::s4();
        let pr = principal(&s4, 2).unwrap();
        assert_eq!(pr.members, set(&s4, "0"));
        assert!(pr.warning.is_none());
        assert!(matches!(principal(&fixtures::s4_bare(), 2), Err(Error::IdentityRequired(_))));
    }

    #[test]
    fn colon_ideals() {
        let p = fixtures::p();
        let zero = Hyperideal::zero(&p);
        assert_eq!(colon(&p, &zero, set(&p, "u")).unwrap(), set(&p, "0"));
        assert_eq!(colon(&p, &zero, set(&p, "0")).unwrap(), p.carrier());
        assert_eq!(colon(&p, &zero, ElemSet::EMPTY).unwrap(), p.carrier());
        let pp = fixtures::p_squared();
        let zz = Hyperideal::zero(&pp);
        assert_eq!(
            colon(&pp, &zz, set(&pp, "(1,0)")).unwrap(),
            set(&pp, "(0,0),(0,1),(0,u),(0,v),(0,w)")
        );
    }

    #[test]
    fn radicals() {
        let s4 = fixtures::s4();
        assert_eq!(radical(&s4, set(&s4, "0")), s4.carrier());
        let bare = fixtures::s4_bare();
        assert_eq!(radical(&bare, set(&bare, "0")), set(&bare, "0,1"));
        assert_eq!(nilpotents(&bare), set(&bare, "0,1"));
        assert_eq!(prime_radical(&bare, set(&bare, "0")), set(&bare, "0,1"));
        assert_eq!(prime_radical(&s4, set(&s4, "0")), set(&s4, "0,1"));
        assert_eq!(prime_radical(&s4, s4.carrier()), s4.carrier());
        let p = fixtures::p();
        assert_eq!(radical(&p, set(&p, "0")), set(&p, "0"));
        assert_eq!(prime_radical(&p, set(&p, "0")), set(&p, "0"));
        assert!(radical_note(&bare).is_some() && radical_note(&p).is_none());
    }

    #[test]
    fn theta_radicals() {
        let pp = fixtures::p_squared();
        let swap = fixtures::swap(&pp);
        let zz = set(&pp, "(0,0)");
        assert_eq!(theta_radical(&pp, zz, &swap), zz);
        let p = fixtures::p();
        let inv = crate::morphism::enumerate_endomorphisms(&p, 1000).unwrap().pop().unwrap();
        assert_eq!(theta_radical(&p, set(&p, "0"), &inv), set(&p, "0"));
        assert_eq!(theta_nilpotents(&p, &Morphism::identity(&p)), set(&p, "0"));
    }

    #[test]
    fn maximality_and_units() {
        let p = fixtures::p();
        assert!(is_maximal(&p, &Hyperideal::zero(&p)).unwrap());
        assert!(matches!(is_maximal(&p, &Hyperideal::whole(&p)), Err(Error::NotProper)));
        let s4 = fixtures::s4();
        assert!(!is_maximal(&s4, &Hyperideal::zero(&s4)).unwrap());
        let max: Vec<_> = max_spectrum(&s4).iter().map(|i| i.members()).collect();
        assert_eq!(max, vec![set(&s4, "0,1"), set(&s4, "0,2")]);
        assert!(is_invertible(&p, p.elem("u").unwrap()).unwrap());
        assert!(!is_invertible(&p, 0).unwrap());
        let g = fixtures::g();
        assert!(is_invertible(&g, g.elem("v").unwrap()).unwrap());
    }

    #[test]
    fn minimal_primes() {
        let s4 = fixtures::s4();
        let mp: Vec<_> = minimal_primes_over(&s4, set(&s4, "0")).iter().map(|i| i.members()).collect();
        assert_eq!(mp, vec![set(&s4, "0,1")]);
        let p = fixtures::p();
        assert_eq!(minimal_primes_over(&p, set(&p, "0")).len(), 1);
        assert!(minimal_primes_over(&p, p.carrier()).is_empty());
    }
}
