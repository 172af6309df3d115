//! Products, quotients, induced endomorphisms and subhyperrings.

use std::ops::ControlFlow;

use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::format::{format_set, format_tuple};
use crate::ideal::{same_table, Hyperideal};
use crate::morphism::Morphism;
use crate::table::{HyperringTable, Signature};

/// Index of the pair `(x, y)` in a product whose first factor has `size1`
/// elements. The first coordinate varies fastest.
pub fn pair_index(size1: usize, x: Elem, y: Elem) -> Elem {
    x + size1 * y
}

/// The coordinates of a product element.
pub fn pair_coords(size1: usize, e: Elem) -> (Elem, Elem) {
    (e % size1, e / size1)
}

fn split_args(size1: usize, t: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    t.iter().map(|&e| pair_coords(size1, e)).unzip()
}

/// The componentwise product `H1 × H2` with labels `(x,y)`.
pub fn product(h1: &HyperringTable, h2: &HyperringTable) -> Result<HyperringTable> {
    if h1.m() != h2.m() || h1.n() != h2.n() {
        return Err(Error::Construction(format!(
            "factors have arities ({},{}) and ({},{})",
            h1.m(),
            h1.n(),
            h2.m(),
            h2.n()
        )));
    }
    let (s1, s2) = (h1.size(), h2.size());
    let size = s1.checked_mul(s2).filter(|&s| s <= crate::elem::MAX_ELEMENTS).ok_or_else(|| {
        Error::Construction(format!("a product of {s1} and {s2} elements exceeds the carrier limit"))
    })?;
    let labels = (0..size)
        .map(|e| {
            let (x, y) = pair_coords(s1, e);
            format!("({},{})", h1.label(x), h2.label(y))
        })
        .collect();
    let one = match (h1.one(), h2.one()) {
        (Some(a), Some(b)) => Some(pair_index(s1, a, b)),
        _ => None,
    };
    let sig = Signature {
        name: format!("{}x{}", h1.name(), h2.name()),
        m: h1.m(),
        n: h1.n(),
        labels,
        zero: pair_index(s1, h1.zero(), h2.zero()),
        one,
        commutative_add: h1.commutative_add() && h2.commutative_add(),
        commutative_mul: h1.commutative_mul() && h2.commutative_mul(),
    };
    HyperringTable::from_fns(
        sig,
        |t| {
            let (a, b) = split_args(s1, t);
            let (xs, ys) = (h1.add(&a), h2.add(&b));
            let mut out = ElemSet::EMPTY;
            for y in ys.iter() {
                for x in xs.iter() {
                    out.insert(pair_index(s1, x, y));
                }
            }
            out
        },
        |t| {
            let (a, b) = split_args(s1, t);
            pair_index(s1, h1.mul(&a), h2.mul(&b))
        },
    )
}

/// `θ1 × θ2` acting on `prod`, which must be `product(θ1's table, θ2's table)`.
pub fn product_endo<'a>(prod: &'a HyperringTable, t1: &Morphism, t2: &Morphism) -> Result<Morphism<'a>> {
    let s1 = t1.source().size();
    if s1 * t2.source().size() != prod.size() {
        return Err(Error::Construction("the product does not match the endomorphisms' factors".into()));
    }
    let map = (0..prod.size())
        .map(|e| {
            let (x, y) = pair_coords(s1, e);
            pair_index(s1, t1.apply(x), t2.apply(y))
        })
        .collect();
    Morphism::endo(format!("{}x{}", t1.name(), t2.name()), prod, map)
}

/// The projection of `prod = product(h1, h2)` onto factor `which` (0 or 1).
pub fn projection<'a>(
    prod: &'a HyperringTable,
    h1: &'a HyperringTable,
    h2: &'a HyperringTable,
    which: usize,
) -> Result<Morphism<'a>> {
    let s1 = h1.size();
    if s1 * h2.size() != prod.size() {
        return Err(Error::Construction("the product does not match its factors".into()));
    }
    let target = if which == 0 { h1 } else { h2 };
    let map = (0..prod.size())
        .map(|e| {
            let (x, y) = pair_coords(s1, e);
            if which == 0 {
                x
            } else {
                y
            }
        })
        .collect();
    Morphism::new(format!("pi{}", which + 1), prod, target, map)
}

/// `E1 × E2` as a subset of `product(h1, h2)`.
pub fn product_set(size1: usize, e1: ElemSet, e2: ElemSet) -> ElemSet {
    let mut out = ElemSet::EMPTY;
    for y in e2.iter() {
        for x in e1.iter() {
            out.insert(pair_index(size1, x, y));
        }
    }
    out
}

/// `H/E` with its cosets and the canonical projection.
#[derive(Clone, Debug)]
pub struct QuotientStructure {
    base: HyperringTable,
    ideal: ElemSet,
    classes: Vec<ElemSet>,
    class_of: Vec<Elem>,
    table: HyperringTable,
}

impl QuotientStructure {
    pub fn base(&self) -> &HyperringTable {
        &self.base
    }

    pub fn ideal(&self) -> ElemSet {
        self.ideal
    }

    /// The cosets, in the order their smallest members appear.
    pub fn classes(&self) -> &[ElemSet] {
        &self.classes
    }

    pub fn table(&self) -> &HyperringTable {
        &self.table
    }

    pub fn into_table(self) -> HyperringTable {
        self.table
    }

    pub fn class_of(&self, u: Elem) -> Elem {
        self.class_of[u]
    }

    /// The epimorphism `u -> u ⊕ E`.
    pub fn projection(&self) -> Morphism<'_> {
        Morphism::trusted("projection", &self.base, &self.table, self.class_of.clone())
    }
}

/// `H/E` with classes `h(u, E, 0^(m-2))`.
///
/// Checks that class addition and multiplication do not depend on the chosen
/// representatives and that the result satisfies every axiom.
pub fn quotient(h: &HyperringTable, e: &Hyperideal) -> Result<QuotientStructure> {
    if !same_table(h, e.parent()) {
        return Err(Error::Precondition("the hyperideal belongs to a different structure".into()));
    }
    e.require_proper()?;
    if !h.commutative_add() {
        return Err(Error::Construction("quotients need a commutative hyperaddition".into()));
    }
    let mut t = vec![h.zero(); h.m()];
    let coset = |u: Elem, t: &mut Vec<Elem>| {
        t[0] = u;
        e.members().iter().fold(ElemSet::EMPTY, |acc, x| {
            t[1] = x;
            acc.union(h.add(t))
        })
    };
    let mut classes: Vec<ElemSet> = Vec::new();
    let mut class_of = vec![0; h.size()];
    for u in 0..h.size() {
        let c = coset(u, &mut t);
        let idx = match classes.iter().position(|&d| d == c) {
            Some(i) => i,
            None => {
                classes.push(c);
                classes.len() - 1
            }
        };
        class_of[u] = idx;
    }
    let mut cover = ElemSet::EMPTY;
    for (i, &c) in classes.iter().enumerate() {
        if !cover.intersection(c).is_empty() || (0..h.size()).any(|u| c.contains(u) && class_of[u] != i) {
            return Err(Error::Construction(format!(
                "cosets do not partition the carrier (class {})",
                format_set(h, c)
            )));
        }
        cover = cover.union(c);
    }
    let labels: Vec<String> = classes
        .iter()
        .map(|&c| {
            let parts: Vec<&str> = c.iter().map(|x| h.label(x)).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();

    let k = classes.len();
    let mut add = vec![None::<ElemSet>; k.pow(h.m() as u32)];
    let mut mul = vec![None::<Elem>; k.pow(h.n() as u32)];
    let index = |t: &[Elem]| t.iter().fold(0, |acc, &c| acc * k + class_of[c]);
    let add_err = for_each_tuple(h.size(), h.m(), |t| {
        let val: ElemSet = h.add(t).iter().map(|x| class_of[x]).collect();
        let slot = &mut add[index(t)];
        match slot {
            Some(prev) if *prev != val => ControlFlow::Break(t.to_vec()),
            _ => {
                *slot = Some(val);
                ControlFlow::Continue(())
            }
        }
    });
    if let Some(t) = add_err {
        return Err(Error::Construction(format!(
            "class addition depends on representatives at {}",
            format_tuple(h, &t)
        )));
    }
    let mul_err = for_each_tuple(h.size(), h.n(), |t| {
        let val = class_of[h.mul(t)];
        let slot = &mut mul[index(t)];
        match slot {
            Some(prev) if *prev != val => ControlFlow::Break(t.to_vec()),
            _ => {
                *slot = Some(val);
                ControlFlow::Continue(())
            }
        }
    });
    if let Some(t) = mul_err {
        return Err(Error::Construction(format!(
            "class multiplication depends on representatives at {}",
            format_tuple(h, &t)
        )));
    }
    let sig = Signature {
        name: format!("{}/{}", h.name(), labels[class_of[h.zero()]]),
        m: h.m(),
        n: h.n(),
        labels,
        zero: class_of[h.zero()],
        one: h.one().map(|o| class_of[o]),
        commutative_add: h.commutative_add(),
        commutative_mul: h.commutative_mul(),
    };
    let table = HyperringTable::from_dense(
        sig,
        add.into_iter().map(|s| s.expect("every class tuple has representatives")).collect(),
        mul.into_iter().map(|s| s.expect("every class tuple has representatives")).collect(),
    )?;
    let report = table.verify_axioms();
    if !report.passed {
        return Err(Error::Construction(format!(
            "the quotient violates {}",
            report.violated().iter().map(|a| a.as_str()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(QuotientStructure {
        base: h.clone(),
        ideal: e.members(),
        classes,
        class_of,
        table,
    })
}

/// `θ_E : u ⊕ E -> θ(u) ⊕ E` on `q`; needs `θ(E) ⊆ E`.
pub fn induced_endo<'q>(q: &'q QuotientStructure, theta: &Morphism) -> Result<Morphism<'q>> {
    if !same_table(q.base(), theta.source()) || !same_table(q.base(), theta.target()) {
        return Err(Error::Precondition(format!(
            "`{}` is not an endomorphism of {}",
            theta.name(),
            q.base().name()
        )));
    }
    if let Some(u) = q.ideal.iter().find(|&u| !q.ideal.contains(theta.apply(u))) {
        return Err(Error::Precondition(format!(
            "θ(E) is not contained in E: `{}` maps {} to {}",
            theta.name(),
            q.base().label(u),
            q.base().label(theta.apply(u))
        )));
    }
    let map = q
        .classes
        .iter()
        .map(|c| q.class_of[theta.apply(c.first().expect("classes are non-empty"))])
        .collect();
    Morphism::endo(format!("{}_E", theta.name()), &q.table, map)
}

/// Checks that `g` is a subhyperring: contains 0 and the declared one, and
/// is closed under `h`, inverses and `k`.
pub fn check_subhyperring(h: &HyperringTable, g: ElemSet) -> Result<()> {
    let fail = |what: String| Err(Error::Precondition(format!("{} is not a subhyperring: {what}", format_set(h, g))));
    if !g.is_subset(h.carrier()) {
        return fail("it has non-elements".into());
    }
    if !g.contains(h.zero()) {
        return fail("zero is missing".into());
    }
    if let Some(one) = h.one().filter(|&o| !g.contains(o)) {
        return fail(format!("the one {} is missing", h.label(one)));
    }
    let members = g.to_vec();
    let pick = |idx: &[usize]| -> Vec<Elem> { idx.iter().map(|&i| members[i]).collect() };
    if let Some(t) = for_each_tuple(members.len(), h.m(), |idx| {
        let t = pick(idx);
        if h.add(&t).is_subset(g) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(t)
        }
    }) {
        return fail(format!("the sum of {} leaves it", format_tuple(h, &t)));
    }
    if let Some(u) = g.iter().find(|&u| h.inverse(u).is_none_or(|v| !g.contains(v))) {
        return fail(format!("the inverse of {} leaves it", h.label(u)));
    }
    if let Some(t) = for_each_tuple(members.len(), h.n(), |idx| {
        let t = pick(idx);
        if g.contains(h.mul(&t)) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(t)
        }
    }) {
        return fail(format!("the product of {} leaves it", format_tuple(h, &t)));
    }
    Ok(())
}

/// The smallest subhyperring containing `s` (and 0 and the declared one).
pub fn subhyperring_closure(h: &HyperringTable, s: ElemSet) -> ElemSet {
    let mut cur = s.intersection(h.carrier());
    cur.insert(h.zero());
    if let Some(one) = h.one() {
        cur.insert(one);
    }
    loop {
        let before = cur;
        for u in before.iter() {
            if let Some(v) = h.inverse(u) {
                cur.insert(v);
            }
        }
        let members = before.to_vec();
        for_each_tuple::<()>(members.len(), h.m(), |idx| {
            let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
            cur = cur.union(h.add(&t));
            ControlFlow::Continue(())
        });
        for_each_tuple::<()>(members.len(), h.n(), |idx| {
            let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
            cur.insert(h.mul(&t));
            ControlFlow::Continue(())
        });
        if cur == before {
            return cur;
        }
    }
}

/// The subhyperring on `g` with labels and order inherited from `h`.
pub fn subhyperring(h: &HyperringTable, g: ElemSet, name: impl Into<String>) -> Result<HyperringTable> {
    check_subhyperring(h, g)?;
    let members = g.to_vec();
    let pos = |e: Elem| members.iter().position(|&x| x == e).expect("closed");
    let sig = Signature {
        name: name.into(),
        m: h.m(),
        n: h.n(),
        labels: members.iter().map(|&e| h.label(e).to_string()).collect(),
        zero: pos(h.zero()),
        one: h.one().map(pos),
        commutative_add: h.commutative_add(),
        commutative_mul: h.commutative_mul(),
    };
    let lift = |t: &[Elem]| -> Vec<Elem> { t.iter().map(|&i| members[i]).collect() };
    HyperringTable::from_fns(
        sig,
        |t| h.add(&lift(t)).iter().map(pos).collect(),
        |t| pos(h.mul(&lift(t))),
    )
}

/// The inclusion of a subhyperring built by [`subhyperring`] from `g`.
pub fn inclusion<'a>(sub: &'a HyperringTable, h: &'a HyperringTable, g: ElemSet) -> Result<Morphism<'a>> {
    Morphism::new("inclusion", sub, h, g.to_vec())
}

/// The subhyperring on `g` together with `θ|G`; needs `θ(G) ⊆ G`.
pub fn restrict(
    h: &HyperringTable,
    g: ElemSet,
    theta: &Morphism,
) -> Result<(HyperringTable, Vec<Elem>)> {
    if !same_table(h, theta.source()) || !same_table(h, theta.target()) {
        return Err(Error::Precondition(format!("`{}` is not an endomorphism of {}", theta.name(), h.name())));
    }
    let sub = subhyperring(h, g, format!("{}|{}", h.name(), format_set(h, g)))?;
    if let Some(u) = g.iter().find(|&u| !g.contains(theta.apply(u))) {
        return Err(Error::Precondition(format!(
            "θ(G) is not contained in G: `{}` maps {} outside",
            theta.name(),
            h.label(u)
        )));
    }
    let members = g.to_vec();
    let map: Vec<Elem> = members
        .iter()
        .map(|&u| members.iter().position(|&x| x == theta.apply(u)).expect("θ(G) ⊆ G"))
        .collect();
    crate::morphism::verify_morphism(&map, &sub, &sub)?
        .holds
        .then_some(())
        .ok_or_else(|| Error::Precondition("the restriction is not an endomorphism".into()))?;
    Ok((sub, map))
}

/// `{(x,x)}` in `product(h, h)`.
pub fn diagonal(h: &HyperringTable) -> ElemSet {
    (0..h.size()).map(|x| pair_index(h.size(), x, x)).collect()
}
