//! Finite sets of naturals, stored as strictly increasing sequences.
//!
//! These carry every finite complement that shows up in the index theory:
//! domain complements, codomain complements, monoset complements, and the
//! finite sets of the cardinality identity. The sorted representation makes
//! structural equality coincide with set equality.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite set of naturals.
///
/// Elements are kept strictly increasing, so `len` is the cardinality and
/// `==` is set equality. Serializes as a plain JSON array of non-negative
/// integers; input arrays are sorted and deduplicated on the way in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteNatSet {
    elements: Vec<u64>,
}

impl FiniteNatSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn singleton(n: u64) -> Self {
        Self { elements: vec![n] }
    }

    /// The set `{0, 1, …, n-1}`.
    pub fn below(n: u64) -> Self {
        Self {
            elements: (0..n).collect(),
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elements.binary_search(&n).is_ok()
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn insert(&mut self, n: u64) {
        if let Err(pos) = self.elements.binary_search(&n) {
            self.elements.insert(pos, n);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    /// The largest element, when the set is inhabited.
    pub fn max_element(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.elements
    }

    /// Elements of `self` or `other`.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (
            self.elements.iter().peekable(),
            other.elements.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        out.push(x);
                        a.next();
                    } else if y < x {
                        out.push(y);
                        b.next();
                    } else {
                        out.push(x);
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { elements: out }
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        Self {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|n| !other.contains(*n))
                .collect(),
        }
    }

    /// Elements of both `self` and `other`.
    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|n| other.contains(*n))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|n| other.contains(*n))
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.elements.iter().all(|n| !other.contains(*n))
    }
}

impl From<Vec<u64>> for FiniteNatSet {
    fn from(mut v: Vec<u64>) -> Self {
        v.sort_unstable();
        v.dedup();
        Self { elements: v }
    }
}

impl From<FiniteNatSet> for Vec<u64> {
    fn from(s: FiniteNatSet) -> Self {
        s.elements
    }
}

impl FromIterator<u64> for FiniteNatSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<'a> IntoIterator for &'a FiniteNatSet {
    type Item = u64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, u64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter().copied()
    }
}

impl fmt::Display for FiniteNatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

/// Checks the cardinality identity `|X \ Y| + |Y| = |Y \ X| + |X|`.
///
/// Both sides count `|X ∪ Y|`, so this holds for every pair of finite sets;
/// the index-additivity argument leans on it.
pub fn card_identity_holds(x: &FiniteNatSet, y: &FiniteNatSet) -> bool {
    let lhs = x.difference(y).len() + y.len();
    let rhs = y.difference(x).len() + x.len();
    lhs == rhs && lhs == x.union(y).len()
}
