//! Homomorphisms between finite hyperrings: verification, endomorphism
//! enumeration, kernels and hyperideal transfer.

use std::fmt;
use std::ops::ControlFlow;

use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::ideal::Hyperideal;
use crate::table::HyperringTable;
use crate::verdict::{Kind, Verdict, Witness};

/// Default node budget for [`enumerate_endomorphisms`].
pub const DEFAULT_ENDO_CAP: u64 = 10_000_000;

/// A verified homomorphism `source -> target`.
#[derive(Clone)]
pub struct Morphism<'a> {
    name: String,
    source: &'a HyperringTable,
    target: &'a HyperringTable,
    map: Vec<Elem>,
}

impl<'a> Morphism<'a> {
    /// Verifies `map` and wraps it; fails with a precondition error carrying
    /// the witness when `map` is not a homomorphism.
    pub fn new(
        name: impl Into<String>,
        source: &'a HyperringTable,
        target: &'a HyperringTable,
        map: Vec<Elem>,
    ) -> Result<Self> {
        let name = name.into();
        let v = verify_morphism(&map, source, target)?;
        if !v.holds {
            let w = v.witness.expect("failing verdicts carry a witness");
            let tuple = w.elements().map(|t| crate::format::format_tuple(source, t));
            return Err(Error::Precondition(format!(
                "`{name}` is not a homomorphism: {} {}",
                w.note(),
                tuple.unwrap_or_default()
            )));
        }
        Ok(Morphism {
            name,
            source,
            target,
            map,
        })
    }

    /// An endomorphism of `table`.
    pub fn endo(name: impl Into<String>, table: &'a HyperringTable, map: Vec<Elem>) -> Result<Self> {
        Morphism::new(name, table, table, map)
    }

    pub fn identity(table: &'a HyperringTable) -> Self {
        Morphism {
            name: "identity".into(),
            source: table,
            target: table,
            map: (0..table.size()).collect(),
        }
    }

    /// Wraps a map already known to be a homomorphism.
    pub(crate) fn trusted(
        name: impl Into<String>,
        source: &'a HyperringTable,
        target: &'a HyperringTable,
        map: Vec<Elem>,
    ) -> Self {
        debug_assert!(verify_morphism(&map, source, target).is_ok_and(|v| v.holds));
        Morphism {
            name: name.into(),
            source,
            target,
            map,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &'a HyperringTable {
        self.source
    }

    pub fn target(&self) -> &'a HyperringTable {
        self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, u: Elem) -> Elem {
        self.map[u]
    }

    pub fn image_of(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|u| self.map[u]).collect()
    }

    pub fn preimage_of(&self, s: ElemSet) -> ElemSet {
        (0..self.map.len()).filter(|&u| s.contains(self.map[u])).collect()
    }

    pub fn image(&self) -> ElemSet {
        self.image_of(self.source.carrier())
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.target.carrier()
    }

    pub fn is_identity(&self) -> bool {
        (std::ptr::eq(self.source, self.target) || self.source == self.target)
            && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Morphism<'a>) -> Result<Morphism<'a>> {
        if first.target != self.source {
            return Err(Error::Precondition("composition of non-matching morphisms".into()));
        }
        let map = first.map.iter().map(|&u| self.map[u]).collect();
        Ok(Morphism {
            name: format!("{}.{}", self.name, first.name),
            source: first.source,
            target: self.target,
            map,
        })
    }
}

impl fmt::Debug for Morphism<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("map", &self.map)
            .finish()
    }
}

/// Checks the three homomorphism conditions (and `f(0) = 0`). The witness is
/// the first failing tuple in declaration order: additive tuples first, then
/// multiplicative ones.
pub fn verify_morphism(map: &[Elem], source: &HyperringTable, target: &HyperringTable) -> Result<Verdict> {
    if map.len() != source.size() {
        return Err(Error::Arity {
            expected: source.size(),
            got: map.len(),
        });
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= target.size()) {
        return Err(Error::UnknownElement(format!("#{bad} in map image")));
    }
    if source.m() != target.m() || source.n() != target.n() {
        return Err(Error::Precondition("source and target arities differ".into()));
    }
    let f = |s: ElemSet| -> ElemSet { s.iter().map(|u| map[u]).collect() };
    let mut img = vec![0; source.m().max(source.n())];
    let add_fail = for_each_tuple(source.size(), source.m(), |t| {
        for (slot, &u) in img.iter_mut().zip(t) {
            *slot = map[u];
        }
        if f(source.add(t)) != target.add(&img[..source.m()]) {
            ControlFlow::Break(t.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(t) = add_fail {
        return Ok(Verdict::fail(Kind::Morphism, Witness::tuple(t, None, "additive condition fails on")));
    }
    let mul_fail = for_each_tuple(source.size(), source.n(), |t| {
        for (slot, &u) in img.iter_mut().zip(t) {
            *slot = map[u];
        }
        if map[source.mul(t)] != target.mul(&img[..source.n()]) {
            ControlFlow::Break(t.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(t) = mul_fail {
        return Ok(Verdict::fail(
            Kind::Morphism,
            Witness::tuple(t, None, "multiplicative condition fails on"),
        ));
    }
    if let (Some(o1), Some(o2)) = (source.one(), target.one()) {
        if map[o1] != o2 {
            return Ok(Verdict::fail(Kind::Morphism, Witness::tuple(vec![o1], None, "one is not preserved")));
        }
    }
    if map[source.zero()] != target.zero() {
        return Ok(Verdict::fail(
            Kind::Morphism,
            Witness::tuple(vec![source.zero()], None, "zero is not preserved"),
        ));
    }
    Ok(Verdict::pass(Kind::Morphism))
}

/// All endomorphisms of `table`, sorted by image vector.
///
/// Backtracking over element images with `f(0) = 0` and `f(1) = 1` fixed;
/// every table entry is checked as soon as all elements it mentions have
/// images. `cap` bounds the number of search nodes.
pub fn enumerate_endomorphisms(table: &HyperringTable, cap: u64) -> Result<Vec<Morphism<'_>>> {
    let size = table.size();
    let mut order = vec![table.zero()];
    if let Some(one) = table.one().filter(|&o| o != table.zero()) {
        order.push(one);
    }
    let rest: Vec<Elem> = (0..size).filter(|e| !order.contains(e)).collect();
    order.extend(rest);
    let mut pos = vec![0; size];
    for (i, &e) in order.iter().enumerate() {
        pos[e] = i;
    }

    // Constraints bucketed by the depth at which they become decidable.
    let mut add_at: Vec<Vec<Vec<Elem>>> = vec![Vec::new(); size];
    for_each_tuple::<()>(size, table.m(), |t| {
        let depth = t
            .iter()
            .copied()
            .chain(table.add(t).iter())
            .map(|e| pos[e])
            .max()
            .unwrap();
        add_at[depth].push(t.to_vec());
        ControlFlow::Continue(())
    });
    let mut mul_at: Vec<Vec<Vec<Elem>>> = vec![Vec::new(); size];
    for_each_tuple::<()>(size, table.n(), |t| {
        let depth = t
            .iter()
            .copied()
            .chain([table.mul(t)])
            .map(|e| pos[e])
            .max()
            .unwrap();
        mul_at[depth].push(t.to_vec());
        ControlFlow::Continue(())
    });

    struct Search<'t> {
        table: &'t HyperringTable,
        order: Vec<Elem>,
        add_at: Vec<Vec<Vec<Elem>>>,
        mul_at: Vec<Vec<Vec<Elem>>>,
        map: Vec<Elem>,
        nodes: u64,
        cap: u64,
        found: Vec<Vec<Elem>>,
        buf: Vec<Elem>,
    }

    impl Search<'_> {
        fn consistent(&mut self, depth: usize) -> bool {
            let t = self.table;
            for tup in &self.add_at[depth] {
                for (slot, &u) in self.buf.iter_mut().zip(tup) {
                    *slot = self.map[u];
                }
                let lhs: ElemSet = t.add(tup).iter().map(|u| self.map[u]).collect();
                if lhs != t.add(&self.buf[..t.m()]) {
                    return false;
                }
            }
            for tup in &self.mul_at[depth] {
                for (slot, &u) in self.buf.iter_mut().zip(tup) {
                    *slot = self.map[u];
                }
                if self.map[t.mul(tup)] != t.mul(&self.buf[..t.n()]) {
                    return false;
                }
            }
            true
        }

        fn run(&mut self, depth: usize) -> Result<()> {
            if depth == self.order.len() {
                self.found.push(self.map.clone());
                return Ok(());
            }
            let e = self.order[depth];
            let fixed = if e == self.table.zero() {
                Some(self.table.zero())
            } else if Some(e) == self.table.one() {
                self.table.one()
            } else {
                None
            };
            let candidates: Vec<Elem> = match fixed {
                Some(v) => vec![v],
                None => (0..self.table.size()).collect(),
            };
            for v in candidates {
                self.nodes += 1;
                if self.nodes > self.cap {
                    return Err(Error::Budget { cap: self.cap });
                }
                self.map[e] = v;
                if self.consistent(depth) {
                    self.run(depth + 1)?;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        table,
        order,
        add_at,
        mul_at,
        map: vec![0; size],
        nodes: 0,
        cap,
        found: Vec::new(),
        buf: vec![0; table.m().max(table.n())],
    };
    search.run(0)?;
    let mut found = search.found;
    found.sort();
    let identity: Vec<Elem> = (0..size).collect();
    let mut counter = 0;
    Ok(found
        .into_iter()
        .map(|map| {
            let name = if map == identity {
                "identity".to_string()
            } else {
                counter += 1;
                format!("endo{counter}")
            };
            Morphism::trusted(name, table, table, map)
        })
        .collect())
}

/// `{u : f(u) = 0}`.
pub fn kernel(f: &Morphism) -> ElemSet {
    f.preimage_of(ElemSet::singleton(f.target().zero()))
}

/// `f^{-1}(ideal)` as a hyperideal of the source.
pub fn preimage_ideal<'a>(f: &Morphism<'a>, ideal: &Hyperideal) -> Result<Hyperideal<'a>> {
    if ideal.parent() != f.target() {
        return Err(Error::Precondition("hyperideal does not live in the morphism's target".into()));
    }
    Hyperideal::new(f.source(), f.preimage_of(ideal.members()))
}

/// `f(ideal)` for a surjective `f` whose kernel lies in `ideal`.
pub fn image_ideal<'a>(f: &Morphism<'a>, ideal: &Hyperideal) -> Result<Hyperideal<'a>> {
    if ideal.parent() != f.source() {
        return Err(Error::Precondition("hyperideal does not live in the morphism's source".into()));
    }
    if !f.is_surjective() {
        return Err(Error::Precondition(format!("`{}` is not surjective", f.name())));
    }
    if !kernel(f).is_subset(ideal.members()) {
        return Err(Error::Precondition(format!(
            "the kernel of `{}` is not contained in the hyperideal",
            f.name()
        )));
    }
    Hyperideal::new(f.target(), f.image_of(ideal.members()))
}

/// The first source element where `θ2 ∘ η` and `η ∘ θ1` differ, if any.
pub fn commute_witness(eta: &Morphism, theta1: &Morphism, theta2: &Morphism) -> Result<Option<Elem>> {
    if theta1.source() != eta.source() || theta1.target() != eta.source() {
        return Err(Error::Precondition("θ1 must be an endomorphism of η's source".into()));
    }
    if theta2.source() != eta.target() || theta2.target() != eta.target() {
        return Err(Error::Precondition("θ2 must be an endomorphism of η's target".into()));
    }
    Ok((0..eta.source().size()).find(|&u| theta2.apply(eta.apply(u)) != eta.apply(theta1.apply(u))))
}

/// Whether `θ2 ∘ η = η ∘ θ1`.
pub fn commutes(eta: &Morphism, theta1: &Morphism, theta2: &Morphism) -> Result<bool> {
    Ok(commute_witness(eta, theta1, theta2)?.is_none())
}
