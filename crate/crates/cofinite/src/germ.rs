//! The group of almost-equality classes and its integer index homomorphism.
//!
//! Almost equality is a congruence for composition, so the classes of
//! partial bijections form a group 𝔾 under composition, the index descends
//! to a homomorphism `Ind : 𝔾 → ℤ`, and the short exact sequence
//!
//! ```text
//! Id → ker(Ind) → 𝔾 → ℤ → 0
//! ```
//!
//! splits via `n ↦ [u]⁻ⁿ`, where `u : n ↦ n + 1` is the canonical index −1
//! generator.
//!
//! One restriction is worth stating up front: within the eventually-shift
//! subclass this library represents, every index-zero map is almost equal to
//! the identity, so the realized group is exactly the subgroup isomorphic to
//! ℤ via `Ind`: a class here is determined by its eventual shift. Kernel
//! elements that are genuinely nontrivial in the full group (classes of
//! permutations that are not eventually a shift, such as the even/odd
//! interleaving) carry infinite information and are out of reach of any
//! finite encoding of this kind.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partial::PartialBijection;

/// The almost-equality class of a partial bijection, identified by its
/// eventual shift `k`. The canonical representative is the pure shift `s_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GermClass {
    shift: i64,
}

impl GermClass {
    /// The class of `f`; depends only on the almost-equality class.
    pub fn of(f: &PartialBijection) -> Self {
        Self { shift: f.shift() }
    }

    /// The class of the identity, the group's neutral element.
    pub fn identity() -> Self {
        Self { shift: 0 }
    }

    /// The class with eventual shift `k`.
    pub fn from_shift(k: i64) -> Self {
        Self { shift: k }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Group multiplication: composition of representatives, which adds the
    /// shifts. `a.mul(&b)` is the class of `f_a ∘ f_b`.
    pub fn mul(&self, other: &GermClass) -> GermClass {
        GermClass {
            shift: self.shift + other.shift,
        }
    }

    /// Group inverse: the class of the inverse map.
    pub fn inv(&self) -> GermClass {
        GermClass { shift: -self.shift }
    }

    /// The index homomorphism `Ind`, equal to `-shift` on this subclass.
    pub fn ind(&self) -> i64 {
        -self.shift
    }

    /// The splitting section `ℤ → 𝔾 : n ↦ [u]⁻ⁿ`, a homomorphism with
    /// `Ind ∘ section = id`.
    pub fn section(n: i64) -> GermClass {
        GermClass { shift: -n }
    }

    /// The canonical class representative: the pure shift `s_k`.
    pub fn representative(&self) -> PartialBijection {
        PartialBijection::pure_shift(self.shift)
    }
}

impl fmt::Display for GermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "germ({:+})", self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::FiniteNatSet;

    #[test]
    fn class_of_examples() {
        let u = PartialBijection::pure_shift(1);
        assert_eq!(GermClass::of(&u), GermClass::from_shift(1));

        let swap = PartialBijection::new(
            0,
            FiniteNatSet::empty(),
            [(3, 4), (4, 3)].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(GermClass::of(&swap), GermClass::identity());

        let r = u.restrict(&FiniteNatSet::from(vec![0, 9]));
        assert_eq!(GermClass::of(&r), GermClass::from_shift(1));
    }

    #[test]
    fn multiplication_examples() {
        let one = GermClass::from_shift(1);
        assert_eq!(one.mul(&one), GermClass::from_shift(2));
        for k in -5..=5 {
            let g = GermClass::from_shift(k);
            assert_eq!(g.mul(&GermClass::identity()), g);
            assert_eq!(GermClass::identity().mul(&g), g);
        }
        assert_eq!(
            GermClass::from_shift(3).mul(&GermClass::from_shift(-3)),
            GermClass::identity()
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(GermClass::from_shift(1).inv(), GermClass::from_shift(-1));
        assert_eq!(GermClass::identity().inv(), GermClass::identity());

        let u = PartialBijection::pure_shift(1);
        assert_eq!(GermClass::of(&u).inv(), GermClass::of(&u.inverse()));
    }

    #[test]
    fn ind_examples() {
        assert_eq!(GermClass::from_shift(1).ind(), -1);
        assert_eq!(GermClass::identity().ind(), 0);
        assert_eq!(GermClass::from_shift(-5).ind(), 5);
        // The representative's index agrees.
        assert_eq!(GermClass::from_shift(-5).representative().index(), 5);
    }

    #[test]
    fn section_examples() {
        assert_eq!(GermClass::section(0), GermClass::identity());
        // section(-1) = [u], the class of the up-shift.
        assert_eq!(
            GermClass::section(-1),
            GermClass::of(&PartialBijection::pure_shift(1))
        );
        let s7 = GermClass::section(7);
        assert_eq!(s7, GermClass::from_shift(-7));
        assert_eq!(s7.ind(), 7);
        assert_eq!(s7.representative().index(), 7);
    }

    #[test]
    fn class_operations_commute_with_map_operations() {
        let maps = [
            PartialBijection::pure_shift(1),
            PartialBijection::pure_shift(-2),
            PartialBijection::new(
                0,
                FiniteNatSet::singleton(2),
                [(7, 2)].into_iter().collect(),
            )
            .unwrap(),
        ];
        for g in &maps {
            for f in &maps {
                assert_eq!(
                    GermClass::of(g).mul(&GermClass::of(f)),
                    GermClass::of(&g.compose(f))
                );
            }
            assert_eq!(GermClass::of(g).inv(), GermClass::of(&g.inverse()));
            assert_eq!(GermClass::of(g).ind(), g.index());
        }
    }

    #[test]
    fn representative_is_pure_shift() {
        let g = GermClass::from_shift(-3);
        let r = g.representative();
        assert_eq!(r.holes(), &FiniteNatSet::below(3));
        assert!(r.exceptions().is_empty());
        assert_eq!(r.index(), 3);

        let h = GermClass::from_shift(2);
        assert!(h.representative().holes().is_empty());
    }
}
