//! Bijections between cofinite subsets of ℕ, represented by finite data.
//!
//! A [`PartialBijection`] is a true bijection `f : A → B` where both `A` and
//! `B` are cofinite subsets of ℕ. Arbitrary such maps carry infinite
//! information, so this library works with the *eventually-shift* subclass:
//! maps equal to `n ↦ n + k` outside a finite set. The subclass is closed
//! under composition, inversion, and restriction, and it realizes every index
//! value in ℤ, so the whole index theory can be exercised exactly.
//!
//! The finite data is:
//!
//! * `shift`: the integer `k` giving the eventual behaviour `n ↦ n + k`;
//! * `holes`: the domain complement `A′`, the points where `f` is undefined;
//! * `exceptions`: finitely many explicit pairs `(a, f(a))` overriding the
//!   shift rule.
//!
//! Values are canonical: an exception pair with `f(a) = a + k` is stripped at
//! construction, so structural equality coincides with equality of maps. The
//! codomain complement `B′` is always recomputed from the data, never stored.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::FiniteNatSet;

/// Rejected raw inputs from [`PartialBijection::new`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    /// An exception key is listed as a hole; a point cannot be both outside
    /// the domain and explicitly mapped.
    #[error("exception key {point} is also a hole")]
    HoleExceptionOverlap { point: u64 },
    /// The same exception key was given twice in a raw encoding.
    #[error("exception key {point} appears more than once")]
    DuplicateExceptionKey { point: u64 },
    /// A tail point would map below zero, leaving ℕ.
    #[error("domain point {point} would map to {point}{shift:+}, below zero")]
    NegativeValue { point: u64, shift: i64 },
    /// Two domain points share a value.
    #[error("domain points {first} and {second} both map to {value}")]
    NotInjective { first: u64, second: u64, value: u64 },
}

/// The exact set of points where two maps with a common eventual shift
/// disagree, or the marker that they disagree almost everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Disagreements {
    Finite(FiniteNatSet),
    Infinite,
}

impl Disagreements {
    pub fn is_finite(&self) -> bool {
        matches!(self, Disagreements::Finite(_))
    }
}

/// Wire form: `{"shift": k, "holes": [...], "exceptions": [[a, v], ...]}`.
#[derive(Serialize, Deserialize)]
struct Encoded {
    shift: i64,
    holes: Vec<u64>,
    exceptions: Vec<(u64, u64)>,
}

/// A bijection between cofinite subsets of ℕ, equal to `n ↦ n + shift`
/// outside a finite set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Encoded", into = "Encoded")]
pub struct PartialBijection {
    shift: i64,
    holes: FiniteNatSet,
    exceptions: BTreeMap<u64, u64>,
}

impl PartialBijection {
    /// Validates raw data and returns the canonical map.
    ///
    /// Checks, in order: no exception key is a hole, every point below
    /// `-shift` is a hole or an exception key (otherwise it would map below
    /// zero), and no two domain points share a value. Redundant exception
    /// pairs with `f(a) = a + shift` are stripped first.
    pub fn new(
        shift: i64,
        holes: FiniteNatSet,
        mut exceptions: BTreeMap<u64, u64>,
    ) -> Result<Self, BuildError> {
        exceptions.retain(|&a, &mut v| a.checked_add_signed(shift) != Some(v));

        for &a in exceptions.keys() {
            if holes.contains(a) {
                return Err(BuildError::HoleExceptionOverlap { point: a });
            }
        }

        if shift < 0 {
            for n in 0..shift.unsigned_abs() {
                if !holes.contains(n) && !exceptions.contains_key(&n) {
                    return Err(BuildError::NegativeValue { point: n, shift });
                }
            }
        }

        let mut seen: BTreeMap<u64, u64> = BTreeMap::new();
        for (&a, &v) in &exceptions {
            if let Some(&first) = seen.get(&v) {
                return Err(BuildError::NotInjective {
                    first,
                    second: a,
                    value: v,
                });
            }
            seen.insert(v, a);
        }
        for (&a, &v) in &exceptions {
            // A tail point m with m + shift = v collides with the pair (a, v).
            let m = v as i128 - shift as i128;
            if (0..=u64::MAX as i128).contains(&m) {
                let m = m as u64;
                if !holes.contains(m) && !exceptions.contains_key(&m) {
                    return Err(BuildError::NotInjective {
                        first: m,
                        second: a,
                        value: v,
                    });
                }
            }
        }

        Ok(Self {
            shift,
            holes,
            exceptions,
        })
    }

    /// The identity map on all of ℕ.
    pub fn identity() -> Self {
        Self::pure_shift(0)
    }

    /// The canonical pure shift `s_k`: for `k ≥ 0` the map `n ↦ n + k` on all
    /// of ℕ; for `k < 0` the map `n ↦ n + k` on `ℕ \ {0, …, -k-1}`.
    pub fn pure_shift(k: i64) -> Self {
        let holes = if k < 0 {
            FiniteNatSet::below(k.unsigned_abs())
        } else {
            FiniteNatSet::empty()
        };
        Self {
            shift: k,
            holes,
            exceptions: BTreeMap::new(),
        }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The domain complement `A′`.
    pub fn holes(&self) -> &FiniteNatSet {
        &self.holes
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, u64> {
        &self.exceptions
    }

    /// `f(n)`, or `None` when `n` is a hole.
    pub fn apply(&self, n: u64) -> Option<u64> {
        if self.holes.contains(n) {
            return None;
        }
        if let Some(&v) = self.exceptions.get(&n) {
            return Some(v);
        }
        Some(
            n.checked_add_signed(self.shift)
                .expect("tail value overflows u64"),
        )
    }

    /// `f⁻¹(m)`, or `None` when `m` is outside the image.
    pub fn preimage(&self, m: u64) -> Option<u64> {
        for (&a, &v) in &self.exceptions {
            if v == m {
                return Some(a);
            }
        }
        let n = m as i128 - self.shift as i128;
        if !(0..=u64::MAX as i128).contains(&n) {
            return None;
        }
        let n = n as u64;
        if self.holes.contains(n) || self.exceptions.contains_key(&n) {
            return None;
        }
        Some(n)
    }

    /// The codomain complement `B′ = ℕ \ f(A)`, computed exactly.
    ///
    /// The complement of the tail image is `[0, k) ∪ (holes + k) ∪ (keys + k)`
    /// clipped to ℕ; removing the exception values from it leaves `B′`.
    pub fn codomain_complement(&self) -> FiniteNatSet {
        let mut missing: FiniteNatSet = (0..self.shift.max(0) as u64).collect();
        for n in self.holes.iter().chain(self.exceptions.keys().copied()) {
            if let Some(v) = n.checked_add_signed(self.shift) {
                missing.insert(v);
            }
        }
        let values: FiniteNatSet = self.exceptions.values().copied().collect();
        missing.difference(&values)
    }

    /// The index `|A′| - |B′|`.
    ///
    /// For this representation the result always equals `-shift`; the library
    /// computes it from the complements anyway and the test suite checks the
    /// two routes against each other.
    pub fn index(&self) -> i64 {
        self.holes.len() as i64 - self.codomain_complement().len() as i64
    }

    /// Removes `removed` from the domain, leaving values elsewhere unchanged.
    pub fn restrict(&self, removed: &FiniteNatSet) -> Self {
        let holes = self.holes.union(removed);
        let exceptions = self
            .exceptions
            .iter()
            .filter(|(a, _)| !removed.contains(**a))
            .map(|(&a, &v)| (a, v))
            .collect();
        Self::new(self.shift, holes, exceptions).expect("restriction of a valid map is valid")
    }

    /// Whether `self` and `other` agree on a cofinite subset of their common
    /// domain. For eventually-shift maps this holds exactly when the shifts
    /// coincide: all other disagreements are confined to the finite
    /// hole/exception structure.
    pub fn almost_equal(&self, other: &Self) -> bool {
        self.shift == other.shift
    }

    /// The exact set `{n ∈ A_f ∩ A_g : f(n) ≠ g(n)}` when it is finite.
    pub fn disagreements(&self, other: &Self) -> Disagreements {
        if self.shift != other.shift {
            return Disagreements::Infinite;
        }
        let w = self.structural_bound().max(other.structural_bound());
        let mut points = FiniteNatSet::empty();
        for n in 0..w {
            if let (Some(a), Some(b)) = (self.apply(n), other.apply(n)) {
                if a != b {
                    points.insert(n);
                }
            }
        }
        Disagreements::Finite(points)
    }

    /// A window size beyond which the map is a pure shift: every hole of `A′`
    /// and `B′` lies below this bound, so finite scans over `[0, bound)` see
    /// all structure.
    pub fn structural_bound(&self) -> u64 {
        let top = self
            .holes
            .max_element()
            .into_iter()
            .chain(self.exceptions.keys().copied().max())
            .chain(self.exceptions.values().copied().max())
            .max()
            .unwrap_or(0);
        1u64.saturating_add(top)
            .saturating_add(2 * self.shift.unsigned_abs())
    }
}

impl TryFrom<Encoded> for PartialBijection {
    type Error = BuildError;

    fn try_from(raw: Encoded) -> Result<Self, BuildError> {
        let mut exceptions = BTreeMap::new();
        for (a, v) in raw.exceptions {
            if exceptions.insert(a, v).is_some() {
                return Err(BuildError::DuplicateExceptionKey { point: a });
            }
        }
        Self::new(raw.shift, FiniteNatSet::from(raw.holes), exceptions)
    }
}

impl From<PartialBijection> for Encoded {
    fn from(f: PartialBijection) -> Encoded {
        Encoded {
            shift: f.shift,
            holes: f.holes.into(),
            exceptions: f.exceptions.into_iter().collect(),
        }
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n ↦ n{:+} off {}", self.shift, self.holes)?;
        if !self.exceptions.is_empty() {
            write!(f, " with [")?;
            for (i, (a, v)) in self.exceptions.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{a}↦{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Failure to read a map as a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a permutation of ℕ: {detail}")]
pub struct NotAPermutation {
    detail: String,
}

/// A finitely supported permutation of ℕ: a partial bijection with empty
/// domain and codomain complements (hence shift 0 and index 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartialBijection", into = "PartialBijection")]
pub struct Permutation {
    inner: PartialBijection,
}

impl Permutation {
    pub fn identity() -> Self {
        Self {
            inner: PartialBijection::identity(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: u64, b: u64) -> Self {
        let exceptions = if a == b {
            BTreeMap::new()
        } else {
            BTreeMap::from([(a, b), (b, a)])
        };
        Self {
            inner: PartialBijection::new(0, FiniteNatSet::empty(), exceptions)
                .expect("a transposition is a valid map"),
        }
    }

    /// Total application; permutations have no holes.
    pub fn apply(&self, n: u64) -> u64 {
        self.inner.apply(n).expect("permutations are total")
    }

    /// The moved points.
    pub fn support(&self) -> FiniteNatSet {
        self.inner.exceptions().keys().copied().collect()
    }

    pub fn inverse(&self) -> Self {
        Self {
            inner: self.inner.inverse(),
        }
    }

    /// `self ∘ other` (apply `other` first); permutations are closed under
    /// composition.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.compose(&other.inner),
        }
    }

    pub fn as_partial(&self) -> &PartialBijection {
        &self.inner
    }

    pub fn into_partial(self) -> PartialBijection {
        self.inner
    }
}

impl TryFrom<PartialBijection> for Permutation {
    type Error = NotAPermutation;

    fn try_from(f: PartialBijection) -> Result<Self, NotAPermutation> {
        if !f.holes().is_empty() {
            return Err(NotAPermutation {
                detail: format!("domain complement is {}", f.holes()),
            });
        }
        let missing = f.codomain_complement();
        if !missing.is_empty() {
            return Err(NotAPermutation {
                detail: format!("image misses {missing}"),
            });
        }
        Ok(Self { inner: f })
    }
}

impl From<Permutation> for PartialBijection {
    fn from(p: Permutation) -> PartialBijection {
        p.inner
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
