//! Total self-maps of ℕ that are bijective off a finite set.
//!
//! A [`NearBijection`] is given by a finite prefix table `f(0), …, f(T-1)`
//! and an eventual shift `f(n) = n + k` for `n ≥ T`. Such a map need not be
//! injective (prefix values may collide with each other or with the tail),
//! but its *monoset* (the points whose value has a singleton preimage) and
//! its range are always cofinite, which is exactly the older notion the
//! partial-bijection index refines. Restricting a near-bijection to its
//! monoset yields a partial bijection whose index agrees with the
//! near-bijection index `|Ω_f′| - |f(Ω_f′)| - |f(Ω)′|`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partial::{BuildError, PartialBijection};
use crate::set::FiniteNatSet;

/// Wire form: `{"prefix": [...], "shift": k}`.
#[derive(Serialize, Deserialize)]
struct Encoded {
    prefix: Vec<u64>,
    shift: i64,
}

/// A total self-map of ℕ: an explicit prefix followed by the shift `n ↦ n + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Encoded", into = "Encoded")]
pub struct NearBijection {
    prefix: Vec<u64>,
    shift: i64,
}

impl NearBijection {
    /// Builds the map `n ↦ prefix[n]` for `n < prefix.len()`, `n ↦ n + shift`
    /// beyond. Fails when the first tail point would map below zero.
    pub fn new(prefix: Vec<u64>, shift: i64) -> Result<Self, BuildError> {
        let threshold = prefix.len() as i64;
        if threshold + shift < 0 {
            return Err(BuildError::NegativeValue {
                point: prefix.len() as u64,
                shift,
            });
        }
        Ok(Self { prefix, shift })
    }

    pub fn identity() -> Self {
        Self {
            prefix: Vec::new(),
            shift: 0,
        }
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The tail threshold `T`.
    pub fn threshold(&self) -> u64 {
        self.prefix.len() as u64
    }

    /// Total application.
    pub fn apply(&self, n: u64) -> u64 {
        match self.prefix.get(n as usize) {
            Some(&v) => v,
            None => n
                .checked_add_signed(self.shift)
                .expect("tail value overflows u64"),
        }
    }

    /// A window size beyond which the map is a pure shift; every element of
    /// the monoset complement and the range complement lies below it.
    pub fn structural_bound(&self) -> u64 {
        let top = self
            .prefix
            .iter()
            .copied()
            .max()
            .map_or(0, |m| m + 1)
            .max(self.threshold());
        1u64.saturating_add(top)
            .saturating_add(2 * self.shift.unsigned_abs())
    }

    /// `Ω_f′`: the points whose value is shared with another point.
    pub fn monoset_complement(&self) -> FiniteNatSet {
        let w = self.structural_bound();
        let mut out = FiniteNatSet::empty();
        for n in 0..w {
            let v = self.apply(n);
            let shared = (0..w).any(|m| m != n && self.apply(m) == v);
            if shared {
                out.insert(n);
            }
        }
        out
    }

    /// `f(Ω)′`: the points missed by the range.
    pub fn range_complement(&self) -> FiniteNatSet {
        let w = self.structural_bound();
        (0..w).filter(|&m| !self.hits(m)).collect()
    }

    /// Whether `m` has any preimage.
    fn hits(&self, m: u64) -> bool {
        if self.prefix.contains(&m) {
            return true;
        }
        let n = m as i128 - self.shift as i128;
        n >= self.threshold() as i128 && n <= u64::MAX as i128
    }

    /// The index in the near-bijection sense:
    /// `|Ω_f′| - |f(Ω_f′)| - |f(Ω)′|`.
    pub fn legacy_index(&self) -> i64 {
        let mono = self.monoset_complement();
        let mono_image: FiniteNatSet = mono.iter().map(|n| self.apply(n)).collect();
        mono.len() as i64 - mono_image.len() as i64 - self.range_complement().len() as i64
    }

    /// Restricts the map to its monoset, where it is injective, yielding a
    /// partial bijection with the same eventual shift. The restriction's
    /// index equals [`legacy_index`](Self::legacy_index).
    pub fn restrict_to_partial(&self) -> PartialBijection {
        let holes = self.monoset_complement();
        let exceptions = (0..self.threshold())
            .filter(|&n| !holes.contains(n))
            .map(|n| (n, self.apply(n)))
            .collect();
        PartialBijection::new(self.shift, holes, exceptions)
            .expect("a near-bijection is injective on its monoset")
    }

    /// Recomputes `|f(Ω_f)′|`, `|f(Ω)′|`, and `|f(Ω_f′)|` independently and
    /// checks the identity `|f(Ω_f)′| = |f(Ω)′| + |f(Ω_f′)|`, which holds for
    /// every near-bijection because `f(Ω) \ f(Ω_f) = f(Ω \ Ω_f)`.
    pub fn reconciliation_check(&self) -> bool {
        let w = self.structural_bound();
        let mono = self.monoset_complement();
        // m is in f(Ω_f) when some non-collision point maps to it.
        let monoset_image_complement: FiniteNatSet =
            (0..w).filter(|&m| !self.hit_by_monoset(m, &mono)).collect();
        let mono_image: FiniteNatSet = mono.iter().map(|n| self.apply(n)).collect();
        monoset_image_complement.len() == self.range_complement().len() + mono_image.len()
    }

    fn hit_by_monoset(&self, m: u64, mono: &FiniteNatSet) -> bool {
        for (n, &v) in self.prefix.iter().enumerate() {
            if v == m && !mono.contains(n as u64) {
                return true;
            }
        }
        let n = m as i128 - self.shift as i128;
        if n < self.threshold() as i128 || n > u64::MAX as i128 {
            return false;
        }
        !mono.contains(n as u64)
    }
}

impl TryFrom<Encoded> for NearBijection {
    type Error = BuildError;

    fn try_from(raw: Encoded) -> Result<Self, BuildError> {
        Self::new(raw.prefix, raw.shift)
    }
}

impl From<NearBijection> for Encoded {
    fn from(f: NearBijection) -> Encoded {
        Encoded {
            prefix: f.prefix,
            shift: f.shift,
        }
    }
}

impl fmt::Display for NearBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prefix {:?}, then n ↦ n{:+}", self.prefix, self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::WindowTable;

    fn near(prefix: &[u64], shift: i64) -> NearBijection {
        NearBijection::new(prefix.to_vec(), shift).unwrap()
    }

    // f(0) = f(1) = 0, identity elsewhere.
    fn double_zero() -> NearBijection {
        near(&[0, 0], 0)
    }

    // f(0) = 3, f(n) = n + 1 beyond; f(2) = 3 collides.
    fn crowded_three() -> NearBijection {
        near(&[3], 1)
    }

    #[test]
    fn tail_below_zero_is_rejected() {
        let err = NearBijection::new(vec![5], -2).unwrap_err();
        assert_eq!(
            err,
            BuildError::NegativeValue {
                point: 1,
                shift: -2
            }
        );
        // With a long enough prefix the same shift is fine.
        assert!(NearBijection::new(vec![5, 0], -2).is_ok());
    }

    #[test]
    fn monoset_complement_examples() {
        assert_eq!(
            double_zero().monoset_complement(),
            FiniteNatSet::from(vec![0, 1])
        );
        assert_eq!(
            NearBijection::identity().monoset_complement(),
            FiniteNatSet::empty()
        );
        assert_eq!(
            crowded_three().monoset_complement(),
            FiniteNatSet::from(vec![0, 2])
        );

        // Recount through the window oracle.
        for f in [double_zero(), crowded_three()] {
            let t = WindowTable::materialize(&f, f.structural_bound()).unwrap();
            assert_eq!(t.monoset_complement(), f.monoset_complement());
        }
    }

    #[test]
    fn range_complement_examples() {
        assert_eq!(double_zero().range_complement(), FiniteNatSet::singleton(1));
        assert_eq!(
            NearBijection::identity().range_complement(),
            FiniteNatSet::empty()
        );
        assert_eq!(
            crowded_three().range_complement(),
            FiniteNatSet::from(vec![0, 1])
        );

        for f in [double_zero(), crowded_three()] {
            let t = WindowTable::materialize(&f, f.structural_bound()).unwrap();
            assert_eq!(t.codomain_complement(f.shift()), f.range_complement());
        }
    }

    #[test]
    fn legacy_index_examples() {
        assert_eq!(double_zero().legacy_index(), 0); // 2 - 1 - 1
        assert_eq!(NearBijection::identity().legacy_index(), 0);
        assert_eq!(crowded_three().legacy_index(), -1); // 2 - 1 - 2

        for f in [double_zero(), crowded_three(), near(&[9, 9, 4], -1)] {
            let t = WindowTable::materialize(&f, f.structural_bound()).unwrap();
            assert_eq!(t.legacy_index(f.shift()), f.legacy_index());
        }
    }

    #[test]
    fn restriction_examples() {
        let r = double_zero().restrict_to_partial();
        assert_eq!(r.holes(), &FiniteNatSet::from(vec![0, 1]));
        assert!(r.exceptions().is_empty());
        assert_eq!(r.index(), 0);

        assert_eq!(
            NearBijection::identity().restrict_to_partial(),
            PartialBijection::identity()
        );

        let r = crowded_three().restrict_to_partial();
        assert_eq!(r.holes(), &FiniteNatSet::from(vec![0, 2]));
        assert_eq!(r.codomain_complement(), FiniteNatSet::from(vec![0, 1, 3]));
        assert_eq!(r.index(), -1);
    }

    #[test]
    fn restriction_agrees_with_legacy_index() {
        for f in [
            double_zero(),
            crowded_three(),
            NearBijection::identity(),
            near(&[9, 9, 4], -1),
            near(&[0, 0, 0, 0], 2),
        ] {
            assert_eq!(f.legacy_index(), f.restrict_to_partial().index());
        }
    }

    #[test]
    fn reconciliation_examples() {
        assert!(double_zero().reconciliation_check()); // 2 = 1 + 1
        assert!(NearBijection::identity().reconciliation_check()); // 0 = 0 + 0
        assert!(crowded_three().reconciliation_check()); // 3 = 2 + 1

        // The restriction's codomain complement is the same count as the
        // reconciliation's left side.
        let f = crowded_three();
        assert_eq!(f.restrict_to_partial().codomain_complement().len(), 3);
    }

    #[test]
    fn complements_stay_below_the_stated_bound() {
        for f in [
            double_zero(),
            crowded_three(),
            near(&[9, 9, 4], -1),
            near(&[31, 0, 31], 4),
        ] {
            let cap = f.threshold()
                + f.shift().unsigned_abs()
                + f.prefix().iter().copied().max().unwrap_or(0)
                + 1;
            assert!(f.monoset_complement().iter().all(|n| n < cap));
            assert!(f.range_complement().iter().all(|n| n < cap));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = crowded_three();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"prefix":[3],"shift":1}"#);
        let back: NearBijection = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);

        assert!(serde_json::from_str::<NearBijection>(r#"{"prefix":[],"shift":-1}"#).is_err());
    }
}
