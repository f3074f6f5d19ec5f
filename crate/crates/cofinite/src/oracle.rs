//! Brute-force verification on finite windows.
//!
//! Everything here recomputes complements, indices, compositions, and
//! monosets by materializing a map as a plain table over `[0, W)` and
//! counting, with no reference to the symbolic formulas in the rest of the
//! library. The precondition `W ≥ structural bound` makes every count
//! complete, and growing the window never changes an answer. The oracle is
//! deliberately naive; it is the ground truth the analytic routes are tested
//! against, and the `check` CLI command exposes it.

use thiserror::Error;

use crate::near::NearBijection;
use crate::partial::PartialBijection;
use crate::set::FiniteNatSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("window {given} is smaller than the structural bound {required}")]
    WindowTooSmall { required: u64, given: u64 },
}

/// A map that can be tabulated on a finite window.
pub trait WindowSource {
    /// A window size beyond which the map is a pure shift.
    fn structural_bound(&self) -> u64;
    /// Pointwise evaluation; `None` marks a point outside the domain.
    fn eval(&self, n: u64) -> Option<u64>;
}

impl WindowSource for PartialBijection {
    fn structural_bound(&self) -> u64 {
        PartialBijection::structural_bound(self)
    }

    fn eval(&self, n: u64) -> Option<u64> {
        self.apply(n)
    }
}

impl WindowSource for NearBijection {
    fn structural_bound(&self) -> u64 {
        NearBijection::structural_bound(self)
    }

    fn eval(&self, n: u64) -> Option<u64> {
        Some(self.apply(n))
    }
}

/// A pointwise snapshot of a map on `[0, W)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowTable {
    bound: u64,
    entries: Vec<Option<u64>>,
}

impl WindowTable {
    /// Tabulates `src` on `[0, window)`; the window must reach the source's
    /// structural bound or the counts below would be incomplete.
    pub fn materialize<S: WindowSource>(src: &S, window: u64) -> Result<Self, OracleError> {
        let required = src.structural_bound();
        if window < required {
            return Err(OracleError::WindowTooSmall {
                required,
                given: window,
            });
        }
        Ok(Self {
            bound: window,
            entries: (0..window).map(|n| src.eval(n)).collect(),
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn entries(&self) -> &[Option<u64>] {
        &self.entries
    }

    /// Table lookup; `n` must lie inside the window.
    pub fn get(&self, n: u64) -> Option<u64> {
        assert!(n < self.bound, "window table consulted outside its bound");
        self.entries[n as usize]
    }

    /// The absent slots: a recount of the domain complement.
    pub fn domain_complement(&self) -> FiniteNatSet {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_none())
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// A recount of the codomain complement by direct counting.
    ///
    /// A point `m` is decidably missing when no window entry hits it and no
    /// out-of-window tail point can: tail points `n ≥ W` land on `n + shift`,
    /// so membership is decidable exactly below `W + min(shift, 0)`. The
    /// structural-bound precondition guarantees every genuinely missing point
    /// sits in that range.
    pub fn codomain_complement(&self, shift: i64) -> FiniteNatSet {
        let upper = (self.bound as i128 + shift.min(0) as i128).max(0) as u64;
        let seen: FiniteNatSet = self.entries.iter().flatten().copied().collect();
        (0..upper).filter(|m| !seen.contains(*m)).collect()
    }

    /// Index by counting: absent domain slots minus decidably missing values.
    pub fn index(&self, shift: i64) -> i64 {
        self.domain_complement().len() as i64 - self.codomain_complement(shift).len() as i64
    }

    /// The points whose value is shared with another point, recounted from
    /// the table. Meaningful for total maps, where out-of-window tail points
    /// cannot collide with anything in the window.
    pub fn monoset_complement(&self) -> FiniteNatSet {
        let mut out = FiniteNatSet::empty();
        for (i, e) in self.entries.iter().enumerate() {
            let Some(v) = e else { continue };
            let shared = self
                .entries
                .iter()
                .enumerate()
                .any(|(j, o)| j != i && o.as_ref() == Some(v));
            if shared {
                out.insert(i as u64);
            }
        }
        out
    }

    /// The near-bijection index `|Ω_f′| - |f(Ω_f′)| - |f(Ω)′|` by counting.
    pub fn legacy_index(&self, shift: i64) -> i64 {
        let mono = self.monoset_complement();
        let mono_image: FiniteNatSet = mono
            .iter()
            .filter_map(|n| self.entries[n as usize])
            .collect();
        mono.len() as i64 - mono_image.len() as i64 - self.codomain_complement(shift).len() as i64
    }
}

/// Checks that the symbolic composite `g ∘ f` agrees pointwise with
/// table-level composition on `[0, window)`.
pub fn compose_check(
    g: &PartialBijection,
    f: &PartialBijection,
    window: u64,
) -> Result<bool, OracleError> {
    let composite = g.compose(f);
    let required = f
        .structural_bound()
        .max(g.structural_bound())
        .max(composite.structural_bound());
    if window < required {
        return Err(OracleError::WindowTooSmall {
            required,
            given: window,
        });
    }
    let tf = WindowTable::materialize(f, window)?;
    let tc = WindowTable::materialize(&composite, window)?;
    // g's table has to cover every value f takes on the window.
    let g_window = tf
        .entries()
        .iter()
        .flatten()
        .copied()
        .max()
        .map_or(window, |m| window.max(m + 1));
    let tg = WindowTable::materialize(g, g_window)?;
    for n in 0..window {
        let expected = tf.get(n).and_then(|v| tg.get(v));
        if expected != tc.get(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn map(shift: i64, holes: &[u64], exc: &[(u64, u64)]) -> PartialBijection {
        PartialBijection::new(
            shift,
            holes.iter().copied().collect(),
            exc.iter().copied().collect(),
        )
        .unwrap()
    }

    #[test]
    fn materialize_examples() {
        let u = PartialBijection::pure_shift(1);
        let t = WindowTable::materialize(&u, 4).unwrap();
        assert_eq!(t.entries(), &[Some(1), Some(2), Some(3), Some(4)]);

        let f = map(0, &[2], &[(7, 2)]);
        let t = WindowTable::materialize(&f, 9).unwrap();
        assert_eq!(
            t.entries(),
            &[
                Some(0),
                Some(1),
                None,
                Some(3),
                Some(4),
                Some(5),
                Some(6),
                Some(2),
                Some(8)
            ]
        );

        let err = WindowTable::materialize(&PartialBijection::identity(), 0).unwrap_err();
        assert_eq!(
            err,
            OracleError::WindowTooSmall {
                required: 1,
                given: 0
            }
        );
    }

    #[test]
    fn index_by_counting() {
        let u = PartialBijection::pure_shift(1);
        assert_eq!(WindowTable::materialize(&u, 8).unwrap().index(1), -1);

        let id = PartialBijection::identity();
        assert_eq!(WindowTable::materialize(&id, 8).unwrap().index(0), 0);

        let f = map(2, &[1], &[(0, 0)]);
        assert_eq!(WindowTable::materialize(&f, 12).unwrap().index(2), -2);
    }

    #[test]
    fn counting_handles_negative_shifts() {
        let down = PartialBijection::pure_shift(-3);
        let t = WindowTable::materialize(&down, 10).unwrap();
        assert_eq!(t.index(-3), 3);
        assert_eq!(t.domain_complement(), FiniteNatSet::below(3));
        assert_eq!(t.codomain_complement(-3), FiniteNatSet::empty());
    }

    #[test]
    fn window_growth_is_stable() {
        for f in [
            PartialBijection::pure_shift(1),
            map(2, &[1], &[(0, 0)]),
            map(-2, &[0, 1, 7], &[(9, 5)]),
            map(0, &[2], &[(7, 2)]),
        ] {
            let w = f.structural_bound();
            let small = WindowTable::materialize(&f, w).unwrap();
            let big = WindowTable::materialize(&f, 2 * w).unwrap();
            assert_eq!(small.index(f.shift()), big.index(f.shift()));
            assert_eq!(
                small.codomain_complement(f.shift()),
                big.codomain_complement(f.shift())
            );
            assert_eq!(small.domain_complement(), big.domain_complement());
        }
    }

    #[test]
    fn compose_check_examples() {
        let id = PartialBijection::identity();
        let f = map(0, &[2], &[(7, 2)]);
        assert!(compose_check(&id, &f, 16).unwrap());

        let u = PartialBijection::pure_shift(1);
        assert!(compose_check(&u, &u, 10).unwrap());

        let g = map(0, &[0, 5], &[]);
        assert!(compose_check(&g, &u, 16).unwrap());

        let err = compose_check(&g, &u, 2).unwrap_err();
        assert!(matches!(err, OracleError::WindowTooSmall { .. }));
    }

    #[test]
    fn tail_collision_check_rejects_bad_exception() {
        // 5 ↦ 9 collides with the tail point 9 ↦ 9; the constructor must
        // reject it, and the table built from a hand-rolled valid neighbour
        // confirms the fixed version is injective on the window.
        let err =
            PartialBijection::new(0, FiniteNatSet::empty(), BTreeMap::from([(5, 9)])).unwrap_err();
        assert!(matches!(
            err,
            crate::partial::BuildError::NotInjective { .. }
        ));

        let fixed = map(0, &[], &[(5, 9), (9, 5)]);
        let t = WindowTable::materialize(&fixed, fixed.structural_bound()).unwrap();
        let values: Vec<u64> = t.entries().iter().flatten().copied().collect();
        let mut dedup = values.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(values.len(), dedup.len());
    }
}
