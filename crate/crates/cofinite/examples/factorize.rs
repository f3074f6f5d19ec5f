//! Any two maps with the same index differ only by permutations:
//! there are λ, ρ with λ∘f ≡ g and f∘ρ ≡ g.

use std::collections::BTreeMap;

use cofinite::{factor_left, factor_right, FiniteNatSet, PartialBijection};

fn main() {
    // Both of these have index -1.
    let f = PartialBijection::pure_shift(1);
    let g = PartialBijection::new(1, FiniteNatSet::singleton(0), BTreeMap::new()).unwrap();
    println!("f = {f}   (index {})", f.index());
    println!("g = {g}   (index {})", g.index());

    let lambda = factor_left(&f, &g).unwrap();
    let rho = factor_right(&f, &g).unwrap();
    println!();
    println!("λ = {lambda}");
    println!("ρ = {rho}");

    let via_left = lambda.as_partial().compose(&f);
    let via_right = f.compose(rho.as_partial());
    println!();
    println!("λ∘f = {via_left}");
    println!("f∘ρ = {via_right}");
    println!(
        "λ∘f ≡ g: {}   f∘ρ ≡ g: {}",
        via_left.almost_equal(&g),
        via_right.almost_equal(&g)
    );

    // Different indices cannot be bridged by permutations.
    let id = PartialBijection::identity();
    println!();
    println!(
        "factoring the identity through f: {}",
        factor_left(&f, &id).unwrap_err()
    );
}
