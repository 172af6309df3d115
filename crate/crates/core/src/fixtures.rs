//! The bundled example structures.
//!
//! * `P`: a five-element Krasner (2,2)-hyperfield.
//! * `G`: a four-element hyperintegral domain.
//! * `S4`: a four-element Krasner (2,4)-hyperring whose declared one is not
//!   neutral; `S4-bare` is the same tables with no one declared.
//! * `P×P`: the square of `P`, shipped with its coordinate swap.

use crate::format::parse_structure;
use crate::morphism::Morphism;
use crate::table::{AxiomId, HyperringTable};

pub const P_HKR: &str = include_str!("../fixtures/p.hkr");
pub const G_HKR: &str = include_str!("../fixtures/g.hkr");
pub const S4_HKR: &str = include_str!("../fixtures/s4.hkr");
pub const S4_BARE_HKR: &str = include_str!("../fixtures/s4_bare.hkr");
pub const P_SQUARED_HKR: &str = include_str!("../fixtures/p_squared.hkr");
pub const Z4_HKR: &str = include_str!("../fixtures/z4.hkr");

pub const ALL_FILES: [(&str, &str); 6] = [
    ("p.hkr", P_HKR),
    ("g.hkr", G_HKR),
    ("s4.hkr", S4_HKR),
    ("s4_bare.hkr", S4_BARE_HKR),
    ("p_squared.hkr", P_SQUARED_HKR),
    ("z4.hkr", Z4_HKR),
];

/// A one-row edit of `p.hkr` aimed at one axiom: `row` replaces `replace`,
/// or is appended when `replace` is `None`. Each edit changes one stored
/// table entry.
#[derive(Clone, Copy, Debug)]
pub struct Mutation {
    pub axiom: AxiomId,
    pub replace: Option<&'static str>,
    pub row: &'static str,
}

/// For every axiom, a one-entry edit of `P` that violates it with as few
/// other axioms as possible. No one-entry edit of `P` violates a single
/// axiom on its own: every such edit also breaks distributivity.
pub const P_MUTATIONS: [Mutation; 9] = [
    Mutation { axiom: AxiomId::Identity, replace: Some("add 0 0 -> 0"), row: "add 0 0 -> 1" },
    Mutation { axiom: AxiomId::Inverse, replace: Some("add 1 1 -> 1"), row: "add 1 1 -> 0 1 u v w" },
    Mutation { axiom: AxiomId::Reversibility, replace: Some("add 1 1 -> 1"), row: "add 1 1 -> 1 v" },
    Mutation { axiom: AxiomId::AddAssociativity, replace: Some("add 1 1 -> 1"), row: "add 1 1 -> 0 1" },
    Mutation { axiom: AxiomId::AddCommutativity, replace: None, row: "add u 1 -> 0 1 u v w" },
    Mutation { axiom: AxiomId::MulAssociativity, replace: Some("mul 1 1 -> 1"), row: "mul 1 1 -> u" },
    Mutation { axiom: AxiomId::MulCommutativity, replace: None, row: "mul u 1 -> v" },
    Mutation { axiom: AxiomId::Distributivity, replace: Some("add 1 u -> 1 u"), row: "add 1 u -> 0 1 u" },
    Mutation { axiom: AxiomId::ZeroAbsorption, replace: None, row: "mul 0 0 -> u" },
];

fn load(text: &str) -> HyperringTable {
    parse_structure(text).expect("bundled fixture parses").table
}

pub fn p() -> HyperringTable {
    load(P_HKR)
}

pub fn g() -> HyperringTable {
    load(G_HKR)
}

pub fn s4() -> HyperringTable {
    load(S4_HKR)
}

pub fn s4_bare() -> HyperringTable {
    load(S4_BARE_HKR)
}

pub fn z4() -> HyperringTable {
    load(Z4_HKR)
}

pub fn p_squared() -> HyperringTable {
    load(P_SQUARED_HKR)
}

/// The coordinate swap `(x,y) -> (y,x)` on [`p_squared`].
pub fn swap(pp: &HyperringTable) -> Morphism<'_> {
    let file = parse_structure(P_SQUARED_HKR).expect("bundled fixture parses");
    let decl = file.endos.iter().find(|d| d.name == "swap").expect("swap is declared");
    Morphism::endo("swap", pp, decl.map.clone()).expect("swap is an endomorphism")
}

impl Mutation {
    /// The text of `p.hkr` with this edit applied.
    pub fn apply(&self) -> String {
        match self.replace {
            Some(from) => {
                let needle = format!("\n{from}\n");
                assert!(P_HKR.contains(&needle), "row `{from}` not found in p.hkr");
                P_HKR.replacen(&needle, &format!("\n{}\n", self.row), 1)
            }
            None => format!("{P_HKR}{}\n", self.row),
        }
    }

    pub fn table(&self) -> HyperringTable {
        load(&self.apply())
    }
}
