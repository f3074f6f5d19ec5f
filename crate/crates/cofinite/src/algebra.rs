//! Composition, inversion, extension to permutations, and factorization.
//!
//! The composite `g ∘ f` is again a partial bijection, indices add under
//! composition, inversion negates the index, and an index-zero map extends to
//! a true permutation of ℕ. Any two maps of equal index are related by
//! permutations on either side, up to almost equality; [`factor_left`] and
//! [`factor_right`] construct the witnesses.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::partial::{PartialBijection, Permutation};
use crate::set::FiniteNatSet;

/// Violated preconditions of the extension and factorization operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Extension to a permutation exists precisely for index zero.
    #[error("index is {index}, not 0; the map does not extend to a permutation")]
    NonZeroIndex { index: i64 },
    /// Factorization through permutations needs equal indices.
    #[error("indices differ: {left} vs {right}")]
    IndexMismatch { left: i64, right: i64 },
}

impl PartialBijection {
    /// The composite `self ∘ other`, with `other` applied first.
    ///
    /// The domain is the `other`-preimage of `B_other ∩ A_self`, the shifts
    /// add, and the finitely many deviations are reconciled over the union of
    /// the two structural windows. Composition is total: no new validity
    /// failure can arise, since every intermediate value is a genuine member
    /// of ℕ.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        let (g, f) = (self, other);
        let shift = f.shift() + g.shift();

        // A′ of the composite: holes of f plus f-preimages of holes of g.
        let mut holes: FiniteNatSet = f.holes().clone();
        for h in g.holes() {
            if let Some(p) = f.preimage(h) {
                holes.insert(p);
            }
        }

        // The composite can deviate from the combined shift only where f
        // deviates or g deviates at f's value.
        let mut candidates: BTreeSet<u64> = f.exceptions().keys().copied().collect();
        for e in g.exceptions().keys() {
            if let Some(p) = f.preimage(*e) {
                candidates.insert(p);
            }
        }

        let mut exceptions = BTreeMap::new();
        for n in candidates {
            if holes.contains(n) {
                continue;
            }
            let mid = f.apply(n).expect("candidate points lie in f's domain");
            let v = g.apply(mid).expect("points over g's holes were removed");
            if n.checked_add_signed(shift) != Some(v) {
                exceptions.insert(n, v);
            }
        }

        PartialBijection::new(shift, holes, exceptions)
            .expect("composite of valid partial bijections is valid")
    }

    /// The inverse map `B → A`: holes and missing values switch roles and
    /// the shift negates.
    pub fn inverse(&self) -> PartialBijection {
        let holes = self.codomain_complement();
        let exceptions = self.exceptions().iter().map(|(&a, &v)| (v, a)).collect();
        PartialBijection::new(-self.shift(), holes, exceptions)
            .expect("inverse of a valid partial bijection is valid")
    }

    /// Extends an index-zero map to a permutation of all of ℕ by matching the
    /// i-th smallest hole with the i-th smallest missing value.
    ///
    /// The extension exists precisely when the index vanishes; otherwise the
    /// two finite complements have different sizes and no matching exists.
    pub fn extend_to_permutation(&self) -> Result<Permutation, AlgebraError> {
        let index = self.index();
        if index != 0 {
            return Err(AlgebraError::NonZeroIndex { index });
        }
        let mut exceptions = self.exceptions().clone();
        for (a, b) in self.holes().iter().zip(self.codomain_complement().iter()) {
            exceptions.insert(a, b);
        }
        let full = PartialBijection::new(self.shift(), FiniteNatSet::empty(), exceptions)
            .expect("increasing-order matching of equal-size complements stays injective");
        Ok(Permutation::try_from(full).expect("a total index-zero map is a permutation"))
    }
}

/// The pair `(f⁻¹ ∘ f, f ∘ f⁻¹)`: the identities of `A_f` and `B_f`. Both are
/// restrictions of the identity, hence almost equal to it.
pub fn sandwich_identities(f: &PartialBijection) -> (PartialBijection, PartialBijection) {
    let inv = f.inverse();
    (inv.compose(f), f.compose(&inv))
}

/// Which side a permutation is composed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The index of `π ∘ f` (left) or `f ∘ π` (right). Composing with a
/// permutation on either side leaves the index unchanged, so the result
/// always equals `f.index()`.
pub fn permutation_sandwich_index(f: &PartialBijection, p: &Permutation, side: Side) -> i64 {
    match side {
        Side::Left => p.as_partial().compose(f).index(),
        Side::Right => f.compose(p.as_partial()).index(),
    }
}

/// A permutation `λ` with `λ ∘ f ≡ g`, built by extending `g ∘ f⁻¹`.
pub fn factor_left(
    f: &PartialBijection,
    g: &PartialBijection,
) -> Result<Permutation, AlgebraError> {
    check_equal_index(f, g)?;
    Ok(g.compose(&f.inverse())
        .extend_to_permutation()
        .expect("g ∘ f⁻¹ has index 0 when the indices agree"))
}

/// A permutation `ρ` with `f ∘ ρ ≡ g`, built by extending `f⁻¹ ∘ g`.
pub fn factor_right(
    f: &PartialBijection,
    g: &PartialBijection,
) -> Result<Permutation, AlgebraError> {
    check_equal_index(f, g)?;
    Ok(f.inverse()
        .compose(g)
        .extend_to_permutation()
        .expect("f⁻¹ ∘ g has index 0 when the indices agree"))
}

fn check_equal_index(f: &PartialBijection, g: &PartialBijection) -> Result<(), AlgebraError> {
    let (left, right) = (f.index(), g.index());
    if left != right {
        return Err(AlgebraError::IndexMismatch { left, right });
    }
    Ok(())
}
