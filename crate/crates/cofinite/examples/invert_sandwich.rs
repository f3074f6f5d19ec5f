//! Inversion negates the index, and f⁻¹ composed with f gives the identity
//! of the domain (and f with f⁻¹ the identity of the codomain).

use std::collections::BTreeMap;

use cofinite::{sandwich_identities, FiniteNatSet, PartialBijection};

fn main() {
    let f = PartialBijection::new(2, FiniteNatSet::singleton(1), BTreeMap::from([(0, 0)])).unwrap();
    let inv = f.inverse();

    println!("f   = {f}");
    println!("f⁻¹ = {inv}");
    println!("index f = {}, index f⁻¹ = {}", f.index(), inv.index());

    // The inverse literally swaps the two complements.
    println!();
    println!("A_f′ = {}  B_f′ = {}", f.holes(), f.codomain_complement());
    println!(
        "A_f⁻¹′ = {}  B_f⁻¹′ = {}",
        inv.holes(),
        inv.codomain_complement()
    );

    // Round trips land back where they started.
    for n in [0u64, 2, 3, 10] {
        if let Some(v) = f.apply(n) {
            println!("f({n}) = {v}, f⁻¹({v}) = {:?}", inv.apply(v));
        }
    }

    let (left, right) = sandwich_identities(&f);
    println!();
    println!("f⁻¹ ∘ f = {left}");
    println!("f ∘ f⁻¹ = {right}");
    let id = PartialBijection::identity();
    println!(
        "both ≡ identity: {} {}",
        left.almost_equal(&id),
        right.almost_equal(&id)
    );
}
