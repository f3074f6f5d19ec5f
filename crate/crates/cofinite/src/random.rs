//! Randomized corpus generators for tests and examples.
//!
//! Everything here goes through a caller-supplied [`Rng`], so seeding a
//! [`StdRng`](rand::rngs::StdRng) gives a reproducible corpus. The builders
//! always succeed: shapes are drawn so that the validity constraints hold by
//! construction, then validated through the ordinary constructors anyway.

use rand::prelude::*;

use crate::near::NearBijection;
use crate::partial::{PartialBijection, Permutation};
use crate::set::FiniteNatSet;

const MAX_HOLES: usize = 8;
const MAX_EXCEPTIONS: usize = 8;
const POINT_RANGE: u64 = 48;
const SHIFT_RANGE: i64 = 8;

/// Draws a partial bijection with shift in `[-8, 8]`, up to eight holes
/// below 48, and up to eight exception pairs.
pub fn random_map(rng: &mut impl Rng) -> PartialBijection {
    let shift = rng.random_range(-SHIFT_RANGE..=SHIFT_RANGE);

    let mut holes = FiniteNatSet::empty();
    if shift < 0 {
        // Negative shift: everything below |shift| must leave the domain,
        // otherwise it would map below zero.
        for n in 0..shift.unsigned_abs() {
            holes.insert(n);
        }
    }
    for _ in 0..rng.random_range(0..=MAX_HOLES) {
        holes.insert(rng.random_range(0..POINT_RANGE));
    }

    let key_count = rng.random_range(0..=MAX_EXCEPTIONS);
    let mut keys = Vec::new();
    while keys.len() < key_count {
        let k = rng.random_range(0..POINT_RANGE);
        if !holes.contains(k) && !keys.contains(&k) {
            keys.push(k);
        }
    }

    // Candidate values: the codomain complement the map would have if every
    // key kept its shifted value. Sending keys to a permutation of a subset
    // keeps the map injective.
    let mut pool = Vec::new();
    for m in 0..shift.max(0) as u64 {
        pool.push(m);
    }
    for h in holes.iter() {
        if let Some(v) = h.checked_add_signed(shift) {
            pool.push(v);
        }
    }
    for &k in &keys {
        if let Some(v) = k.checked_add_signed(shift) {
            pool.push(v);
        }
    }
    pool.sort_unstable();
    pool.dedup();
    pool.shuffle(rng);

    let exceptions = keys.iter().copied().zip(pool).collect();
    PartialBijection::new(shift, holes, exceptions).expect("pool construction keeps the map valid")
}

/// Draws a map with index zero by sampling until one appears; the sampler
/// above hits index zero often enough for this to be cheap.
pub fn random_zero_index_map(rng: &mut impl Rng) -> PartialBijection {
    loop {
        let f = random_map(rng);
        if f.index() == 0 {
            return f;
        }
    }
}

/// Draws a map with nonzero index.
pub fn random_nonzero_index_map(rng: &mut impl Rng) -> PartialBijection {
    loop {
        let f = random_map(rng);
        if f.index() != 0 {
            return f;
        }
    }
}

/// Draws a finitely supported permutation: a shuffle of `[0, size)` with
/// everything beyond fixed.
pub fn random_permutation(rng: &mut impl Rng) -> Permutation {
    let size = rng.random_range(0..=12u64);
    let mut values: Vec<u64> = (0..size).collect();
    values.shuffle(rng);
    let exceptions = values
        .into_iter()
        .enumerate()
        .map(|(n, v)| (n as u64, v))
        .collect();
    let inner = PartialBijection::new(0, FiniteNatSet::empty(), exceptions)
        .expect("a shuffle is injective");
    Permutation::try_from(inner).expect("no holes and a full range")
}

/// Draws a total near-bijection: a prefix of up to sixteen arbitrary values
/// below 32, then a shift with `|k| <= 4` (raised when needed so the tail
/// stays in ℕ).
pub fn random_near(rng: &mut impl Rng) -> NearBijection {
    let len = rng.random_range(0..=16usize);
    let prefix: Vec<u64> = (0..len).map(|_| rng.random_range(0..32u64)).collect();
    let mut shift = rng.random_range(-4..=4i64);
    if shift < -(len as i64) {
        shift = -(len as i64);
    }
    NearBijection::new(prefix, shift).expect("shift repaired to keep the tail nonnegative")
}

/// Produces a map almost equal to `f`: a short chain of restrictions and
/// permutation sandwiches, each of which changes `f` at only finitely many
/// points.
pub fn perturb(rng: &mut impl Rng, f: &PartialBijection) -> PartialBijection {
    let mut out = f.clone();
    for _ in 0..rng.random_range(1..=3) {
        match rng.random_range(0..3) {
            0 => {
                let removed: FiniteNatSet = (0..rng.random_range(1..=4))
                    .map(|_| rng.random_range(0..POINT_RANGE))
                    .collect();
                out = out.restrict(&removed);
            }
            1 => out = random_permutation(rng).as_partial().compose(&out),
            _ => out = out.compose(random_permutation(rng).as_partial()),
        }
    }
    out
}
