//! Building maps and reading off their index.
//!
//! The index of a bijection between cofinite subsets of ℕ is
//! `|A′| - |B′|`: how many points the domain is missing, minus how many the
//! codomain is missing.

use std::collections::BTreeMap;

use cofinite::{FiniteNatSet, PartialBijection};

fn main() {
    // The up-shift u : ℕ → ℕ \ {0}, n ↦ n + 1. Domain complete, image
    // misses 0, so the index is -1.
    let u = PartialBijection::pure_shift(1);
    println!("u = {u}");
    println!("  A′ = {}", u.holes());
    println!("  B′ = {}", u.codomain_complement());
    println!("  index = {}", u.index());

    // A map with every ingredient: eventual shift +2, the point 1 removed
    // from the domain, and 0 rerouted to 0 instead of 2.
    let f = PartialBijection::new(2, FiniteNatSet::singleton(1), BTreeMap::from([(0, 0)])).unwrap();
    println!("\nf = {f}");
    println!(
        "  f(0) = {:?}, f(1) = {:?}, f(5) = {:?}",
        f.apply(0),
        f.apply(1),
        f.apply(5)
    );
    println!("  B′ = {}", f.codomain_complement());
    println!("  index = {}", f.index());

    // Construction is validated. A bare shift down would send 0 to -1.
    let err = PartialBijection::new(-1, FiniteNatSet::empty(), BTreeMap::new()).unwrap_err();
    println!("\nrejected: {err}");

    // Reusing a value is caught too: with 0 ↦ 1, the tail point 1 ↦ 1 collides.
    let err =
        PartialBijection::new(0, FiniteNatSet::empty(), BTreeMap::from([(0, 1)])).unwrap_err();
    println!("rejected: {err}");

    // Every index in ℤ is realized by a pure shift.
    for k in [-3i64, -1, 0, 1, 3] {
        let s = PartialBijection::pure_shift(k);
        println!("\ns_{k}: {s}\n  index = {}", s.index());
    }
}
