//! Finite Krasner (m,n)-hyperrings as explicit operation tables.
//!
//! A [`HyperringTable`] stores an m-ary hyperaddition and an n-ary
//! multiplication over a carrier of at most 128 labelled elements. On top of
//! it the crate provides the axiom checker, hyperideal lattices, radicals,
//! homomorphisms, primality-style classification relative to an
//! endomorphism, products and quotients, and an executable theorem suite.
//!
//! ```
//! use krasner::{classify, fixtures, ideal::Hyperideal};
//!
//! let s4 = fixtures::s4();
//! let zero = Hyperideal::zero(&s4);
//! let v = classify::is_prime(&s4, &zero).unwrap();
//! assert!(!v.holds);
//! assert_eq!(v.witness_tuple(), Some(&[1, 2, 3, 3][..]));
//! ```

pub mod classify;
pub mod cli;
pub mod construct;
pub mod elem;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod ideal;
pub mod morphism;
pub mod table;
pub mod theorems;
pub mod verdict;

pub use elem::{Elem, ElemSet};
pub use error::{Error, Result};
pub use ideal::Hyperideal;
pub use morphism::Morphism;
pub use table::{AxiomId, AxiomReport, HyperringTable};
pub use verdict::{Kind, Verdict, Witness};
