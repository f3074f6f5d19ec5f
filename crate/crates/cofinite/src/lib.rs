//! Exact index theory for bijections between cofinite subsets of ℕ.
//!
//! A partial bijection here is an injection `f: A → B` where both the
//! domain complement `A′` and the range complement `B′` are finite. Its
//! *index* is the integer `|A′| - |B′|`. The index is additive under
//! composition, negates under inversion, vanishes exactly on the maps that
//! extend to finitely supported permutations of ℕ, and survives to the
//! quotient by the finite-difference relation, where it becomes a group
//! isomorphism onto ℤ.
//!
//! Maps are stored exactly: an eventual shift `n ↦ n + k`, a finite set of
//! holes removed from the domain, and a finite exception table. Every
//! operation is finite arithmetic on that data; no floating point, no
//! truncation. An independent window oracle ([`WindowTable`]) recounts every
//! quantity from a table of values and is used throughout the tests to keep
//! the symbolic formulas honest.
//!
//! # Quick tour
//!
//! ```
//! use cofinite::{FiniteNatSet, PartialBijection};
//!
//! // u: delete 0 from the domain, then n ↦ n - 1.
//! let no_exceptions = std::collections::BTreeMap::new();
//! let u = PartialBijection::new(-1, FiniteNatSet::singleton(0), no_exceptions).unwrap();
//! assert_eq!(u.index(), 1);
//!
//! // Its inverse n ↦ n + 1 misses 0 on the other side.
//! let v = u.inverse();
//! assert_eq!(v.index(), -1);
//! assert_eq!(v.apply(3), Some(4));
//!
//! // Indices add under composition.
//! let w = u.compose(&u);
//! assert_eq!(w.index(), 2);
//! ```
//!
//! The `examples/` directory walks through each capability: indices and
//! validation, composition, inversion, extension to permutations, factoring
//! through permutations, the quotient group, near-bijections, and the
//! window oracle.

pub mod algebra;
pub mod cli;
pub mod germ;
pub mod near;
pub mod oracle;
pub mod partial;
pub mod random;
pub mod set;

pub use algebra::{
    factor_left, factor_right, permutation_sandwich_index, sandwich_identities, AlgebraError, Side,
};
pub use germ::GermClass;
pub use near::NearBijection;
pub use oracle::{compose_check, OracleError, WindowSource, WindowTable};
pub use partial::{BuildError, Disagreements, NotAPermutation, PartialBijection, Permutation};
pub use set::{card_identity_holds, FiniteNatSet};
