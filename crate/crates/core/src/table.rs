//! Finite Krasner (m,n)-hyperrings as explicit operation tables.
//!
//! Both operations are stored densely, one entry per ordered tuple, indexed in
//! mixed radix with the first argument most significant. The commutativity
//! flags record what the structure claims; they decide how the text format
//! stores rows and which axioms [`HyperringTable::verify_axioms`] checks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::elem::{for_each_choice, for_each_tuple, Elem, ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Upper bound on the number of dense entries in either table.
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

#[derive(Clone, PartialEq, Eq)]
pub struct HyperringTable {
    name: String,
    m: usize,
    n: usize,
    labels: Vec<String>,
    add: Vec<ElemSet>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Option<Elem>,
    commutative_add: bool,
    commutative_mul: bool,
}

/// Everything needed to build a table except the operation entries.
#[derive(Clone, Debug)]
pub struct Signature {
    pub name: String,
    pub m: usize,
    pub n: usize,
    pub labels: Vec<String>,
    pub zero: Elem,
    pub one: Option<Elem>,
    pub commutative_add: bool,
    pub commutative_mul: bool,
}

fn dense_len(size: usize, arity: usize) -> Result<usize> {
    let mut len: usize = 1;
    for _ in 0..arity {
        len = len
            .checked_mul(size)
            .filter(|&l| l <= MAX_TABLE_ENTRIES)
            .ok_or_else(|| {
                Error::InvalidTable(format!(
                    "{size}^{arity} table entries exceed the limit of {MAX_TABLE_ENTRIES}"
                ))
            })?;
    }
    Ok(len)
}

impl Signature {
    fn validate(&self) -> Result<()> {
        if self.m < 2 || self.n < 2 {
            return Err(Error::InvalidTable(format!(
                "arities must be at least 2 (m = {}, n = {})",
                self.m, self.n
            )));
        }
        let size = self.labels.len();
        if size == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if size > MAX_ELEMENTS {
            return Err(Error::InvalidTable(format!(
                "carrier has {size} elements, the limit is {MAX_ELEMENTS}"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidTable(format!("duplicate element label {l}")));
            }
        }
        if self.zero >= size {
            return Err(Error::UnknownElement(format!("#{}", self.zero)));
        }
        if let Some(one) = self.one {
            if one >= size {
                return Err(Error::UnknownElement(format!("#{one}")));
            }
        }
        Ok(())
    }
}

impl HyperringTable {
    /// Builds a table from dense entry vectors.
    pub fn from_dense(sig: Signature, add: Vec<ElemSet>, mul: Vec<Elem>) -> Result<Self> {
        sig.validate()?;
        let size = sig.labels.len();
        let add_len = dense_len(size, sig.m)?;
        let mul_len = dense_len(size, sig.n)?;
        if add.len() != add_len || mul.len() != mul_len {
            return Err(Error::InvalidTable(format!(
                "expected {add_len} addition and {mul_len} multiplication entries, got {} and {}",
                add.len(),
                mul.len()
            )));
        }
        let carrier = ElemSet::full(size);
        if let Some(pos) = add
            .iter()
            .position(|s| s.is_empty() || !s.is_subset(carrier))
        {
            return Err(Error::InvalidTable(format!(
                "addition entry #{pos} is empty or leaves the carrier"
            )));
        }
        if let Some(pos) = mul.iter().position(|&e| e >= size) {
            return Err(Error::InvalidTable(format!(
                "multiplication entry #{pos} leaves the carrier"
            )));
        }
        Ok(HyperringTable {
            name: sig.name,
            m: sig.m,
            n: sig.n,
            labels: sig.labels,
            add,
            mul,
            zero: sig.zero,
            one: sig.one,
            commutative_add: sig.commutative_add,
            commutative_mul: sig.commutative_mul,
        })
    }

    /// Builds a table by evaluating the two operations on every ordered tuple.
    pub fn from_fns(
        sig: Signature,
        mut add: impl FnMut(&[Elem]) -> ElemSet,
        mut mul: impl FnMut(&[Elem]) -> Elem,
    ) -> Result<Self> {
        sig.validate()?;
        let size = sig.labels.len();
        let mut add_entries = Vec::with_capacity(dense_len(size, sig.m)?);
        for_each_tuple::<()>(size, sig.m, |t| {
            add_entries.push(add(t));
            ControlFlow::Continue(())
        });
        let mut mul_entries = Vec::with_capacity(dense_len(size, sig.n)?);
        for_each_tuple::<()>(size, sig.n, |t| {
            mul_entries.push(mul(t));
            ControlFlow::Continue(())
        });
        Self::from_dense(sig, add_entries, mul_entries)
    }

    pub fn signature(&self) -> Signature {
        Signature {
            name: self.name.clone(),
            m: self.m,
            n: self.n,
            labels: self.labels.clone(),
            zero: self.zero,
            one: self.one,
            commutative_add: self.commutative_add,
            commutative_mul: self.commutative_mul,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    /// Looks an element up by label.
    pub fn elem(&self, label: &str) -> Result<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    /// The declared one, or an identity-required error naming `op`.
    pub fn require_one(&self, op: &'static str) -> Result<Elem> {
        self.one.ok_or(Error::IdentityRequired(op))
    }

    pub fn commutative_add(&self) -> bool {
        self.commutative_add
    }

    pub fn commutative_mul(&self) -> bool {
        self.commutative_mul
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same tables with a different (or no) declared one.
    pub fn with_one(mut self, one: Option<Elem>) -> Result<Self> {
        if let Some(o) = one {
            if o >= self.size() {
                return Err(Error::UnknownElement(format!("#{o}")));
            }
        }
        self.one = one;
        Ok(self)
    }

    fn index(&self, tuple: &[Elem]) -> usize {
        let size = self.size();
        tuple.iter().fold(0, |acc, &e| {
            debug_assert!(e < size);
            acc * size + e
        })
    }

    /// `h(tuple)`; the tuple must have length `m`.
    pub fn add(&self, tuple: &[Elem]) -> ElemSet {
        debug_assert_eq!(tuple.len(), self.m);
        self.add[self.index(tuple)]
    }

    /// `k(tuple)`; the tuple must have length `n`.
    pub fn mul(&self, tuple: &[Elem]) -> Elem {
        debug_assert_eq!(tuple.len(), self.n);
        self.mul[self.index(tuple)]
    }

    /// Replaces one ordered addition entry.
    pub fn set_add_entry(&mut self, tuple: &[Elem], value: ElemSet) -> Result<()> {
        self.check_tuple(tuple, self.m)?;
        if value.is_empty() || !value.is_subset(self.carrier()) {
            return Err(Error::InvalidTable("addition value must be a non-empty subset".into()));
        }
        let i = self.index(tuple);
        self.add[i] = value;
        Ok(())
    }

    /// Replaces one ordered multiplication entry.
    pub fn set_mul_entry(&mut self, tuple: &[Elem], value: Elem) -> Result<()> {
        self.check_tuple(tuple, self.n)?;
        if value >= self.size() {
            return Err(Error::UnknownElement(format!("#{value}")));
        }
        let i = self.index(tuple);
        self.mul[i] = value;
        Ok(())
    }

    pub(crate) fn check_tuple(&self, tuple: &[Elem], arity: usize) -> Result<()> {
        if tuple.len() != arity {
            return Err(Error::Arity {
                expected: arity,
                got: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&e| e >= self.size()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        Ok(())
    }

    /// `h` lifted to sets: the union of `h` over every choice of arguments.
    pub fn add_sets(&self, args: &[ElemSet]) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for_each_choice::<()>(args, |t| {
            out = out.union(self.add(t));
            ControlFlow::Continue(())
        });
        out
    }

    /// `k` lifted to sets: every value of `k` over choices of arguments.
    pub fn mul_sets(&self, args: &[ElemSet]) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for_each_choice::<()>(args, |t| {
            out.insert(self.mul(t));
            ControlFlow::Continue(())
        });
        out
    }

    /// The iterated hyperoperation `h_(l)` on `l(m-1)+1` arguments, folded
    /// from the left.
    pub fn iterated_add(&self, l: usize, args: &[Elem]) -> Result<ElemSet> {
        let expected = l * (self.m - 1) + 1;
        if l == 0 || args.len() != expected {
            return Err(Error::Arity {
                expected,
                got: args.len(),
            });
        }
        self.check_tuple(args, expected)?;
        let mut acc = self.add(&args[..self.m]);
        let mut buf = vec![ElemSet::EMPTY; self.m];
        for chunk in args[self.m..].chunks(self.m - 1) {
            buf[0] = acc;
            for (slot, &e) in buf[1..].iter_mut().zip(chunk) {
                *slot = ElemSet::singleton(e);
            }
            acc = self.add_sets(&buf);
        }
        Ok(acc)
    }

    /// The iterated operation `k_(l)` on `l(n-1)+1` arguments, folded from
    /// the left.
    pub fn iterated_mul(&self, l: usize, args: &[Elem]) -> Result<Elem> {
        let expected = l * (self.n - 1) + 1;
        if l == 0 || args.len() != expected {
            return Err(Error::Arity {
                expected,
                got: args.len(),
            });
        }
        self.check_tuple(args, expected)?;
        let mut acc = self.mul(&args[..self.n]);
        let mut buf = vec![0; self.n];
        for chunk in args[self.n..].chunks(self.n - 1) {
            buf[0] = acc;
            buf[1..].copy_from_slice(chunk);
            acc = self.mul(&buf);
        }
        Ok(acc)
    }

    /// `k(u^(r), 1^(n-r))` for `r <= n`, otherwise `k_(l)(u^(r))` with
    /// `r = l(n-1)+1`. `r = 1` yields `u` itself and, like every `r < n`,
    /// needs a declared one.
    pub fn power(&self, u: Elem, r: usize) -> Result<Elem> {
        self.check_tuple(&[u], 1)?;
        let n = self.n;
        if r == 0 {
            return Err(Error::InvalidExponent(r));
        }
        if r < n {
            let one = self.require_one("power")?;
            if r == 1 {
                return Ok(u);
            }
            let mut t = vec![one; n];
            t[..r].fill(u);
            return Ok(self.mul(&t));
        }
        if !(r - 1).is_multiple_of(n - 1) {
            return Err(Error::InvalidExponent(r));
        }
        let l = (r - 1) / (n - 1);
        self.iterated_mul(l, &vec![u; r])
    }

    /// Whether some valid power of `u` lands in `target`.
    ///
    /// Exponents `1..n` are tried when a one is declared; then `n, 2n-1, ...`
    /// through `p <- k(p, u^(n-1))` until the value repeats.
    pub fn power_sequence_members(&self, u: Elem, target: ElemSet) -> bool {
        self.power_sequence_hits(u, |p| target.contains(p))
    }

    /// Like [`Self::power_sequence_members`] with an arbitrary predicate on
    /// the power's value.
    pub fn power_sequence_hits(&self, u: Elem, mut hit: impl FnMut(Elem) -> bool) -> bool {
        if self.one.is_some() {
            for r in 1..self.n {
                if hit(self.power(u, r).expect("valid exponent")) {
                    return true;
                }
            }
        }
        let mut buf = vec![u; self.n];
        let mut p = self.mul(&buf);
        let mut seen = ElemSet::EMPTY;
        while !seen.contains(p) {
            if hit(p) {
                return true;
            }
            seen.insert(p);
            buf[0] = p;
            p = self.mul(&buf);
        }
        false
    }

    /// The unique additive inverse of `u`, if there is exactly one.
    pub fn inverse(&self, u: Elem) -> Option<Elem> {
        let mut found = None;
        let mut t = vec![self.zero; self.m];
        t[0] = u;
        for v in 0..self.size() {
            t[1] = v;
            if self.add(&t).contains(self.zero) {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    /// Checks every Krasner (m,n)-hyperring axiom by exhaustive enumeration.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut c = Collector::default();
        let size = self.size();
        let (m, n, zero) = (self.m, self.n, self.zero);

        // (a)(1) identity: h(u, 0^(m-1)) = {u}, and no other element does this.
        let mut t = vec![zero; m];
        for u in 0..size {
            t[0] = u;
            if self.add(&t) != ElemSet::singleton(u) {
                c.record(AxiomId::Identity, vec![u], None);
            }
        }
        for e in (0..size).filter(|&e| e != zero) {
            let neutral = (0..size).all(|u| {
                let mut t = vec![e; m];
                t[0] = u;
                self.add(&t) == ElemSet::singleton(u)
            });
            if neutral {
                c.record(AxiomId::Identity, vec![e], None);
            }
        }

        // (a)(2) inverses: exactly one v with 0 in h(u, v, 0^(m-2)).
        let inverses: Vec<Option<Elem>> = (0..size).map(|u| self.inverse(u)).collect();
        for u in 0..size {
            if inverses[u].is_none() {
                c.record(AxiomId::Inverse, vec![u], None);
            }
        }

        // (a)(3) reversibility, on tuples whose entries all have inverses.
        for_each_tuple::<()>(size, m, |tup| {
            let invs: Option<Vec<Elem>> = tup.iter().map(|&x| inverses[x]).collect();
            let Some(invs) = invs else {
                return ControlFlow::Continue(());
            };
            for w in self.add(tup) {
                for i in 0..m {
                    let mut args = Vec::with_capacity(m);
                    args.push(w);
                    args.extend((0..m).filter(|&j| j != i).map(|j| invs[j]));
                    if !self.add(&args).contains(tup[i]) {
                        let mut wit = tup.to_vec();
                        wit.push(w);
                        c.record(AxiomId::Reversibility, wit, Some(i + 1));
                    }
                }
            }
            ControlFlow::Continue(())
        });

        // Associativity of h over all (2m-1)-tuples and nesting positions.
        for_each_tuple::<()>(size, 2 * m - 1, |x| {
            let nested = |i: usize| {
                let mut args: Vec<ElemSet> = Vec::with_capacity(m);
                args.extend(x[..i].iter().map(|&e| ElemSet::singleton(e)));
                args.push(self.add(&x[i..i + m]));
                args.extend(x[i + m..].iter().map(|&e| ElemSet::singleton(e)));
                self.add_sets(&args)
            };
            let first = nested(0);
            if let Some(i) = (1..m).find(|&i| nested(i) != first) {
                c.record(AxiomId::AddAssociativity, x.to_vec(), Some(i + 1));
            }
            ControlFlow::Continue(())
        });

        if self.commutative_add {
            for_each_tuple::<()>(size, m, |x| {
                let mut sorted = x.to_vec();
                sorted.sort_unstable();
                if self.add(x) != self.add(&sorted) {
                    c.record(AxiomId::AddCommutativity, x.to_vec(), None);
                }
                ControlFlow::Continue(())
            });
        }

        // (b) associativity of k.
        let mut buf = vec![0; n];
        for_each_tuple::<()>(size, 2 * n - 1, |x| {
            let mut nested = |i: usize| {
                buf[..i].copy_from_slice(&x[..i]);
                buf[i] = self.mul(&x[i..i + n]);
                buf[i + 1..].copy_from_slice(&x[i + n..]);
                self.mul(&buf)
            };
            let first = nested(0);
            if let Some(i) = (1..n).find(|&i| nested(i) != first) {
                c.record(AxiomId::MulAssociativity, x.to_vec(), Some(i + 1));
            }
            ControlFlow::Continue(())
        });

        if self.commutative_mul {
            for_each_tuple::<()>(size, n, |x| {
                let mut sorted = x.to_vec();
                sorted.sort_unstable();
                if self.mul(x) != self.mul(&sorted) {
                    c.record(AxiomId::MulCommutativity, x.to_vec(), None);
                }
                ControlFlow::Continue(())
            });
        }

        // (c) distributivity in every position i. Witness layout:
        // (u_1..u_{i-1}, v_1..v_m, u_{i+1}..u_n).
        for i in 0..n {
            for_each_tuple::<()>(size, n - 1 + m, |x| {
                let (before, rest) = x.split_at(i);
                let (vs, after) = rest.split_at(m);
                let mut args: Vec<ElemSet> = Vec::with_capacity(n);
                args.extend(before.iter().map(|&e| ElemSet::singleton(e)));
                args.push(self.add(vs));
                args.extend(after.iter().map(|&e| ElemSet::singleton(e)));
                let lhs = self.mul_sets(&args);
                let products: Vec<Elem> = vs
                    .iter()
                    .map(|&v| {
                        let mut k_args = before.to_vec();
                        k_args.push(v);
                        k_args.extend_from_slice(after);
                        self.mul(&k_args)
                    })
                    .collect();
                if lhs != self.add(&products) {
                    c.record(AxiomId::Distributivity, x.to_vec(), Some(i + 1));
                }
                ControlFlow::Continue(())
            });
        }

        // (d) zero absorbs in every position.
        for i in 0..n {
            for_each_tuple::<()>(size, n - 1, |x| {
                let mut args = x.to_vec();
                args.insert(i, zero);
                if self.mul(&args) != zero {
                    c.record(AxiomId::ZeroAbsorption, args, Some(i + 1));
                }
                ControlFlow::Continue(())
            });
        }

        let mut warnings = Vec::new();
        if let Some(one) = self.one {
            let mut t = vec![one; n];
            if let Some(u) = (0..size).find(|&u| {
                t[0] = u;
                self.mul(&t) != u
            }) {
                warnings.push(AxiomWarning {
                    id: WarningId::OneNotNeutral,
                    witness: vec![u],
                });
            }
        }

        let violations: Vec<Violation> = c.0.into_values().collect();
        AxiomReport {
            passed: violations.is_empty(),
            violations,
            warnings,
        }
    }
}

impl fmt::Debug for HyperringTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperringTable")
            .field("name", &self.name)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("elements", &self.labels)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

/// The axioms [`HyperringTable::verify_axioms`] checks, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    Identity,
    Inverse,
    Reversibility,
    AddAssociativity,
    AddCommutativity,
    MulAssociativity,
    MulCommutativity,
    Distributivity,
    ZeroAbsorption,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::Identity,
        AxiomId::Inverse,
        AxiomId::Reversibility,
        AxiomId::AddAssociativity,
        AxiomId::AddCommutativity,
        AxiomId::MulAssociativity,
        AxiomId::MulCommutativity,
        AxiomId::Distributivity,
        AxiomId::ZeroAbsorption,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Identity => "identity",
            AxiomId::Inverse => "inverse",
            AxiomId::Reversibility => "reversibility",
            AxiomId::AddAssociativity => "add-associativity",
            AxiomId::AddCommutativity => "add-commutativity",
            AxiomId::MulAssociativity => "mul-associativity",
            AxiomId::MulCommutativity => "mul-commutativity",
            AxiomId::Distributivity => "distributivity",
            AxiomId::ZeroAbsorption => "zero-absorption",
        }
    }

    pub fn parse(s: &str) -> Option<AxiomId> {
        AxiomId::ALL.into_iter().find(|a| a.as_str() == s)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WarningId {
    /// `k(u, 1^(n-1)) != u` for some `u`.
    OneNotNeutral,
}

impl WarningId {
    pub fn as_str(self) -> &'static str {
        match self {
            WarningId::OneNotNeutral => "one-not-neutral",
        }
    }
}

impl fmt::Display for WarningId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First failing instance of one axiom, plus how many instances failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: Vec<Elem>,
    /// 1-based argument position for axioms quantified over positions.
    pub position: Option<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWarning {
    pub id: WarningId,
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<AxiomWarning>,
}

impl AxiomReport {
    pub fn violated(&self) -> Vec<AxiomId> {
        self.violations.iter().map(|v| v.axiom).collect()
    }

    pub fn has_warning(&self, id: WarningId) -> bool {
        self.warnings.iter().any(|w| w.id == id)
    }
}

#[derive(Default)]
struct Collector(BTreeMap<AxiomId, Violation>);

impl Collector {
    fn record(&mut self, axiom: AxiomId, witness: Vec<Elem>, position: Option<usize>) {
        self.0
            .entry(axiom)
            .and_modify(|v| v.count += 1)
            .or_insert(Violation {
                axiom,
                witness,
                position,
                count: 1,
            });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s4() -> HyperringTable {
        fixtures::s4()
    }

    fn set(t: &HyperringTable, labels: &[&str]) -> ElemSet {
        labels.iter().map(|l| t.elem(l).unwrap()).collect()
    }

    #[test]
    fn iterated_add_on_s4() {
        let h = s4();
        assert_eq!(h.iterated_add(1, &[1, 1]).unwrap(), set(&h, &["0", "1"]));
        assert_eq!(h.iterated_add(2, &[2, 3, 1]).unwrap(), set(&h, &["0", "1"]));
        for x in 0..4 {
            assert_eq!(h.iterated_add(1, &[x, 0]).unwrap(), ElemSet::singleton(x));
        }
        assert_eq!(
            h.iterated_add(2, &[1, 1]),
            Err(Error::Arity { expected: 3, got: 2 })
        );
        assert!(matches!(h.iterated_add(1, &[1, 9]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn iterated_mul_on_s4() {
        let h = s4();
        assert_eq!(h.iterated_mul(1, &[2, 3, 3, 2]).unwrap(), 2);
        assert_eq!(h.iterated_mul(1, &[1, 2, 3, 3]).unwrap(), 0);
        assert_eq!(h.iterated_mul(2, &[2; 7]).unwrap(), 2);
        assert!(matches!(h.iterated_mul(2, &[2; 4]), Err(Error::Arity { .. })));
    }

    #[test]
    fn powers_on_s4() {
        let h = s4();
        assert_eq!(h.one(), Some(1));
        assert_eq!(h.power(2, 2).unwrap(), 0);
        assert_eq!(h.power(2, 4).unwrap(), 2);
        assert_eq!(h.power(2, 1).unwrap(), 2);
        assert_eq!(h.power(2, 7).unwrap(), 2);
        assert_eq!(h.power(2, 5), Err(Error::InvalidExponent(5)));
        assert_eq!(h.power(2, 0), Err(Error::InvalidExponent(0)));
        let bare = h.with_one(None).unwrap();
        assert_eq!(bare.power(2, 2), Err(Error::IdentityRequired("power")));
        assert_eq!(bare.power(2, 4).unwrap(), 2);
    }

    #[test]
    fn power_sequence_search() {
        let h = s4();
        let zero = ElemSet::singleton(0);
        assert!(h.power_sequence_members(1, zero));
        let bare = h.clone().with_one(None).unwrap();
        assert!(!bare.power_sequence_members(2, zero));
        assert!(bare.power_sequence_members(1, zero));
        let p = fixtures::p();
        assert!(p.power_sequence_members(p.zero(), zero));
        assert_eq!(p.power(p.elem("u").unwrap(), 1).unwrap(), p.elem("u").unwrap());
    }

    #[test]
    fn axioms_of_bundled_structures() {
        for t in [fixtures::p(), fixtures::g()] {
            let r = t.verify_axioms();
            assert!(r.passed, "{}: {:?}", t.name(), r.violations);
            assert!(r.warnings.is_empty(), "{}", t.name());
        }
        let r = s4().verify_axioms();
        assert!(r.passed, "{:?}", r.violations);
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.warnings[0].id, WarningId::OneNotNeutral);
        let r = s4().with_one(None).unwrap().verify_axioms();
        assert!(r.passed && r.warnings.is_empty());
    }

    #[test]
    fn broken_inverse_is_reported() {
        let mut h = s4();
        h.set_add_entry(&[2, 2], ElemSet::singleton(1)).unwrap();
        let r = h.verify_axioms();
        assert!(!r.passed);
        assert!(r.violated().contains(&AxiomId::Inverse));
        let v = r.violations.iter().find(|v| v.axiom == AxiomId::Inverse).unwrap();
        assert_eq!(v.witness, vec![2]);
    }

    #[test]
    fn bad_zero_absorption_witness_has_zero_in_place() {
        let mut h = fixtures::p();
        h.set_mul_entry(&[0, 1], 1).unwrap();
        let r = h.verify_axioms();
        let v = r
            .violations
            .iter()
            .find(|v| v.axiom == AxiomId::ZeroAbsorption)
            .unwrap();
        assert_eq!(v.witness, vec![0, 1]);
        assert_eq!(v.position, Some(1));
    }

    #[test]
    fn from_dense_rejects_bad_shapes() {
        let sig = Signature {
            name: "x".into(),
            m: 2,
            n: 2,
            labels: vec!["0".into(), "1".into()],
            zero: 0,
            one: None,
            commutative_add: true,
            commutative_mul: true,
        };
        let err = HyperringTable::from_dense(sig.clone(), vec![ElemSet::EMPTY; 4], vec![0; 4]);
        assert!(matches!(err, Err(Error::InvalidTable(_))));
        let err = HyperringTable::from_dense(sig.clone(), vec![ElemSet::singleton(0); 3], vec![0; 4]);
        assert!(matches!(err, Err(Error::InvalidTable(_))));
        let mut bad = sig;
        bad.zero = 5;
        let err = HyperringTable::from_dense(bad, vec![ElemSet::singleton(0); 4], vec![0; 4]);
        assert!(matches!(err, Err(Error::UnknownElement(_))));
    }
}
