//! Boolean verdicts with concrete witnesses.

use std::cmp::Reverse;
use std::fmt;

use crate::elem::{Elem, ElemSet};

/// Which predicate a [`Verdict`] answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Hyperideal,
    Morphism,
    Prime,
    Primary,
    EndoPrime,
    EndoPrimary,
    StronglyEndoPrime,
    Maximal,
    ThetaMaximal,
    Domain,
    ThetaDomain,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Hyperideal,
        Kind::Morphism,
        Kind::Prime,
        Kind::Primary,
        Kind::EndoPrime,
        Kind::EndoPrimary,
        Kind::StronglyEndoPrime,
        Kind::Maximal,
        Kind::ThetaMaximal,
        Kind::Domain,
        Kind::ThetaDomain,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Hyperideal => "hyperideal",
            Kind::Morphism => "morphism",
            Kind::Prime => "prime",
            Kind::Primary => "primary",
            Kind::EndoPrime => "endo-prime",
            Kind::EndoPrimary => "endo-primary",
            Kind::StronglyEndoPrime => "strongly-endo-prime",
            Kind::Maximal => "maximal",
            Kind::ThetaMaximal => "theta-maximal",
            Kind::Domain => "domain",
            Kind::ThetaDomain => "theta-domain",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A concrete reason a predicate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An element tuple, with the 1-based argument position when the failure
    /// is tied to one.
    Tuple {
        tuple: Vec<Elem>,
        position: Option<usize>,
        note: String,
    },
    /// A tuple of hyperideals (strongly Endo-prime, theta-maximal).
    Ideals { ideals: Vec<ElemSet>, note: String },
}

impl Witness {
    pub fn tuple(tuple: Vec<Elem>, position: Option<usize>, note: impl Into<String>) -> Self {
        Witness::Tuple {
            tuple,
            position,
            note: note.into(),
        }
    }

    pub fn ideals(ideals: Vec<ElemSet>, note: impl Into<String>) -> Self {
        Witness::Ideals {
            ideals,
            note: note.into(),
        }
    }

    pub fn elements(&self) -> Option<&[Elem]> {
        match self {
            Witness::Tuple { tuple, .. } => Some(tuple),
            Witness::Ideals { .. } => None,
        }
    }

    pub fn note(&self) -> &str {
        match self {
            Witness::Tuple { note, .. } | Witness::Ideals { note, .. } => note,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: Kind,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub warnings: Vec<String>,
}

impl Verdict {
    pub fn pass(kind: Kind) -> Self {
        Verdict {
            kind,
            holds: true,
            witness: None,
            warnings: Vec::new(),
        }
    }

    pub fn fail(kind: Kind, witness: Witness) -> Self {
        Verdict {
            kind,
            holds: false,
            witness: Some(witness),
            warnings: Vec::new(),
        }
    }

    pub fn with_warnings(mut self, warnings: Vec<String>) -> Self {
        self.warnings = warnings;
        self
    }

    pub fn witness_tuple(&self) -> Option<&[Elem]> {
        self.witness.as_ref().and_then(Witness::elements)
    }
}

/// Keeps the preferred failing tuple seen so far.
///
/// Preference: the most distinct entries; then the earliest set of distinct
/// entries; then repeats pushed toward later entries of that set; then
/// lexicographic order. For `{1,2,3}` in four slots this picks `(1,2,3,3)`.
#[derive(Default)]
pub(crate) struct WitnessPicker {
    best: Option<(WitnessKey, Vec<Elem>)>,
}

type WitnessKey = (Reverse<usize>, Vec<Elem>, Vec<usize>, Vec<Elem>);

fn witness_key(t: &[Elem]) -> WitnessKey {
    let mut support = t.to_vec();
    support.sort_unstable();
    support.dedup();
    let mult = support
        .iter()
        .map(|s| t.iter().filter(|&&x| x == *s).count())
        .collect();
    (Reverse(support.len()), support, mult, t.to_vec())
}

impl WitnessPicker {
    pub(crate) fn offer(&mut self, t: &[Elem]) {
        let key = witness_key(t);
        if self.best.as_ref().is_none_or(|(k, _)| key < *k) {
            self.best = Some((key, t.to_vec()));
        }
    }

    pub(crate) fn into_best(self) -> Option<Vec<Elem>> {
        self.best.map(|(_, t)| t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picker_prefers_spread_supports() {
        let mut p = WitnessPicker::default();
        for t in [[1, 1, 1, 1], [1, 1, 2, 3], [3, 3, 2, 1], [1, 2, 2, 3], [1, 2, 3, 3]] {
            p.offer(&t);
        }
        assert_eq!(p.into_best(), Some(vec![1, 2, 3, 3]));

        let mut p = WitnessPicker::default();
        for t in [[5, 1], [1, 5], [2, 10]] {
            p.offer(&t);
        }
        assert_eq!(p.into_best(), Some(vec![1, 5]));
        assert_eq!(WitnessPicker::default().into_best(), None);
    }

    #[test]
    fn kinds_round_trip_through_names() {
        for k in Kind::ALL {
            assert_eq!(Kind::parse(k.as_str()), Some(k));
        }
        assert_eq!(Kind::parse("nope"), None);
    }
}
