//! A map extends to a permutation of all of ℕ exactly when its index is
//! zero: equal-sized complements can be matched off, unequal ones cannot.

use std::collections::BTreeMap;

use cofinite::{FiniteNatSet, PartialBijection};

fn main() {
    // Index zero: 2 is missing from the domain, 7 from the image.
    let f = PartialBijection::new(0, FiniteNatSet::singleton(2), BTreeMap::from([(7, 2)])).unwrap();
    println!("f = {f}");
    println!(
        "A′ = {}, B′ = {}, index = {}",
        f.holes(),
        f.codomain_complement(),
        f.index()
    );

    let p = f.extend_to_permutation().unwrap();
    println!("extends to the permutation {p}");
    println!(
        "p(2) = {}, p(7) = {}, p(3) = {}",
        p.apply(2),
        p.apply(7),
        p.apply(3)
    );
    println!("support = {}", p.support());

    // The up-shift has index -1; no permutation can contain it.
    let u = PartialBijection::pure_shift(1);
    println!("\nu = {u}, index = {}", u.index());
    println!("refused: {}", u.extend_to_permutation().unwrap_err());

    // Matching is in increasing order: i-th hole to i-th missing value.
    let g = PartialBijection::new(
        0,
        FiniteNatSet::from(vec![1, 4]),
        BTreeMap::from([(0, 4), (6, 1)]),
    )
    .unwrap();
    println!("\ng = {g}");
    println!("A′ = {}, B′ = {}", g.holes(), g.codomain_complement());
    let q = g.extend_to_permutation().unwrap();
    println!("extension: {q}");
}
