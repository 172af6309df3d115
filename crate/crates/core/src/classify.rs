//! Primality-style predicates on hyperideals.
//!
//! The position clause "for some i" is evaluated over every position. A
//! failing verdict carries the tuple on which no position helps, chosen by
//! [`WitnessPicker`]: the tuple with the most distinct entries, the
//! smallest such set of entries, and repeats placed last.

use std::ops::ControlFlow;

use crate::elem::{for_each_tuple, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_hyperideals, is_maximal, radical, same_table, Hyperideal};
use crate::morphism::Morphism;
use crate::table::HyperringTable;
use crate::verdict::{Kind, Verdict, Witness, WitnessPicker};

fn check_parent(h: &HyperringTable, e: &Hyperideal) -> Result<()> {
    if same_table(h, e.parent()) {
        Ok(())
    } else {
        Err(Error::Precondition("the hyperideal belongs to a different structure".into()))
    }
}

fn check_endo(h: &HyperringTable, theta: &Morphism) -> Result<()> {
    if same_table(h, theta.source()) && same_table(h, theta.target()) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("`{}` is not an endomorphism of {}", theta.name(), h.name())))
    }
}

/// Warnings attached to verdicts that substitute the declared one.
pub fn one_warnings(h: &HyperringTable) -> Vec<String> {
    let Some(one) = h.one() else {
        return Vec::new();
    };
    let mut t = vec![one; h.n()];
    for u in 0..h.size() {
        t[0] = u;
        if h.mul(&t) != u {
            return vec![format!(
                "declared one {} is not a scalar identity (k{} = {})",
                h.label(one),
                crate::format::format_tuple(h, &t),
                h.label(h.mul(&t))
            )];
        }
    }
    Vec::new()
}

/// Scans all n-tuples whose product lies in `e`; `rescued(t, i, sub)` says
/// whether position `i` satisfies the alternative, where `sub` is the product
/// with `u_i` replaced by the one.
fn scan(
    h: &HyperringTable,
    e: ElemSet,
    kind: Kind,
    one: Option<Elem>,
    mut rescued: impl FnMut(Elem) -> bool,
) -> Verdict {
    let mut picker = WitnessPicker::default();
    let mut buf = vec![0; h.n()];
    for_each_tuple::<()>(h.size(), h.n(), |t| {
        if !e.contains(h.mul(t)) || t.iter().any(|&u| e.contains(u)) {
            return ControlFlow::Continue(());
        }
        let saved = match one {
            None => false,
            Some(one) => (0..t.len()).any(|i| {
                buf.copy_from_slice(t);
                buf[i] = one;
                rescued(h.mul(&buf))
            }),
        };
        if !saved {
            picker.offer(t);
        }
        ControlFlow::Continue(())
    });
    match picker.into_best() {
        None => Verdict::pass(kind),
        Some(t) => Verdict::fail(kind, Witness::tuple(t, None, "no position satisfies the condition")),
    }
}

/// `k(u_1..u_n) ∈ Q` forces some `u_i ∈ Q`.
pub fn is_prime(h: &HyperringTable, q: &Hyperideal) -> Result<Verdict> {
    check_parent(h, q)?;
    q.require_proper()?;
    Ok(scan(h, q.members(), Kind::Prime, None, |_| false))
}

/// `k(u_1..u_n) ∈ P` forces, for some `i`, `u_i ∈ P` or
/// `k(u_1..1..u_n) ∈ rad(P)`.
pub fn is_primary(h: &HyperringTable, p: &Hyperideal) -> Result<Verdict> {
    check_parent(h, p)?;
    let one = h.require_one("is_primary")?;
    p.require_proper()?;
    let rad = radical(h, p.members());
    Ok(scan(h, p.members(), Kind::Primary, Some(one), |x| rad.contains(x)).with_warnings(one_warnings(h)))
}

/// `k(u_1..u_n) ∈ E` forces, for some `i`, `u_i ∈ E` or
/// `θ(k(u_1..1..u_n)) ∈ E`.
pub fn is_endo_prime(h: &HyperringTable, e: &Hyperideal, theta: &Morphism) -> Result<Verdict> {
    check_parent(h, e)?;
    check_endo(h, theta)?;
    let one = h.require_one("is_endo_prime")?;
    e.require_proper()?;
    let m = e.members();
    Ok(scan(h, m, Kind::EndoPrime, Some(one), |x| m.contains(theta.apply(x))).with_warnings(one_warnings(h)))
}

/// As [`is_endo_prime`] with the θ-clause landing in `rad(E)`.
pub fn is_endo_primary(h: &HyperringTable, e: &Hyperideal, theta: &Morphism) -> Result<Verdict> {
    check_parent(h, e)?;
    check_endo(h, theta)?;
    let one = h.require_one("is_endo_primary")?;
    e.require_proper()?;
    let rad = radical(h, e.members());
    Ok(
        scan(h, e.members(), Kind::EndoPrimary, Some(one), |x| rad.contains(theta.apply(x)))
            .with_warnings(one_warnings(h)),
    )
}

/// The Endo-prime condition over n-tuples of hyperideals, with `k` of
/// hyperideals read as the set of all products and `U_i ∈ E` read as
/// `U_i ⊆ E`. A failing verdict carries the first failing tuple of
/// hyperideals in lattice order.
pub fn is_strongly_endo_prime(h: &HyperringTable, e: &Hyperideal, theta: &Morphism) -> Result<Verdict> {
    check_parent(h, e)?;
    check_endo(h, theta)?;
    let one = h.require_one("is_strongly_endo_prime")?;
    e.require_proper()?;
    let lattice: Vec<ElemSet> = enumerate_hyperideals(h).iter().map(|i| i.members()).collect();
    let em = e.members();
    let mut args = vec![ElemSet::EMPTY; h.n()];
    let fail = for_each_tuple(lattice.len(), h.n(), |idx| {
        for (slot, &i) in args.iter_mut().zip(idx) {
            *slot = lattice[i];
        }
        if !h.mul_sets(&args).is_subset(em) || args.iter().any(|u| u.is_subset(em)) {
            return ControlFlow::Continue(());
        }
        let saved = (0..args.len()).any(|i| {
            let mut sub = args.clone();
            sub[i] = ElemSet::singleton(one);
            theta.image_of(h.mul_sets(&sub)).is_subset(em)
        });
        if saved {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(args.clone())
        }
    });
    let v = match fail {
        None => Verdict::pass(Kind::StronglyEndoPrime),
        Some(ideals) => Verdict::fail(
            Kind::StronglyEndoPrime,
            Witness::ideals(ideals, "no position satisfies the condition"),
        ),
    };
    Ok(v.with_warnings(one_warnings(h)))
}

/// No hyperideal lies strictly between `m` and `H`.
pub fn maximal(h: &HyperringTable, m: &Hyperideal) -> Result<Verdict> {
    check_parent(h, m)?;
    if is_maximal(h, m)? {
        return Ok(Verdict::pass(Kind::Maximal));
    }
    let between = enumerate_hyperideals(h)
        .into_iter()
        .find(|e| e.is_proper() && m.members().is_subset(e.members()) && e.members() != m.members())
        .expect("a non-maximal ideal has a proper strict superset");
    Ok(Verdict::fail(
        Kind::Maximal,
        Witness::ideals(vec![between.members()], "strictly between the hyperideal and H:"),
    ))
}

/// Every hyperideal `E ⊇ M` has `θ(E) ⊆ M` or `E = H`.
pub fn is_theta_maximal(h: &HyperringTable, m: &Hyperideal, theta: &Morphism) -> Result<Verdict> {
    check_parent(h, m)?;
    check_endo(h, theta)?;
    m.require_proper()?;
    let bad = enumerate_hyperideals(h).into_iter().find(|e| {
        e.is_proper() && m.members().is_subset(e.members()) && !theta.image_of(e.members()).is_subset(m.members())
    });
    Ok(match bad {
        None => Verdict::pass(Kind::ThetaMaximal),
        Some(e) => Verdict::fail(
            Kind::ThetaMaximal,
            Witness::ideals(vec![e.members()], "proper hyperideal above with θ(E) outside:"),
        ),
    })
}

/// `k(u_1..u_n) = 0` forces some `u_i = 0`.
pub fn is_hyperintegral_domain(h: &HyperringTable) -> Result<Verdict> {
    let zero = Hyperideal::zero(h);
    let mut v = is_prime(h, &zero)?;
    v.kind = Kind::Domain;
    Ok(v)
}

/// `{0}` is Endo-prime with respect to `θ`.
pub fn is_theta_domain(h: &HyperringTable, theta: &Morphism) -> Result<Verdict> {
    let zero = Hyperideal::zero(h);
    let mut v = is_endo_prime(h, &zero, theta)?;
    v.kind = Kind::ThetaDomain;
    Ok(v)
}

/// Runs the predicate named by `kind`. `theta` is required for the θ-variants.
pub fn classify(h: &HyperringTable, e: &Hyperideal, kind: Kind, theta: Option<&Morphism>) -> Result<Verdict> {
    let need = |op: &str| {
        theta.ok_or_else(|| Error::Precondition(format!("`{op}` needs an endomorphism")))
    };
    match kind {
        Kind::Prime => is_prime(h, e),
        Kind::Primary => is_primary(h, e),
        Kind::EndoPrime => is_endo_prime(h, e, need("endo-prime")?),
        Kind::EndoPrimary => is_endo_primary(h, e, need("endo-primary")?),
        Kind::StronglyEndoPrime => is_strongly_endo_prime(h, e, need("strongly-endo-prime")?),
        Kind::Maximal => maximal(h, e),
        Kind::ThetaMaximal => is_theta_maximal(h, e, need("theta-maximal")?),
        Kind::Domain => is_hyperintegral_domain(h),
        Kind::ThetaDomain => is_theta_domain(h, need("theta-domain")?),
        Kind::Hyperideal => Ok(crate::ideal::is_hyperideal(h, e.members())),
        Kind::Morphism => Err(Error::Precondition("`morphism` is not a hyperideal predicate".into())),
    }
}
