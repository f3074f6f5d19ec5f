//! Composition and the additivity of the index.

use std::collections::BTreeMap;

use cofinite::{FiniteNatSet, PartialBijection};

fn main() {
    // f is the up-shift; g deletes 0 and 5 from its domain.
    let f = PartialBijection::pure_shift(1);
    let g = PartialBijection::new(0, FiniteNatSet::from(vec![0, 5]), BTreeMap::new()).unwrap();

    let c = g.compose(&f);
    println!("f     = {f}");
    println!("g     = {g}");
    println!("g ∘ f = {c}");
    println!();
    println!(
        "index f = {}, index g = {}, index g∘f = {}",
        f.index(),
        g.index(),
        c.index()
    );

    // The complements of the composite come from the pieces:
    //   |A_{g∘f}′| = |A_f′| + |A_g′ ∖ B_f′|
    //   |B_{g∘f}′| = |B_g′| + |B_f′ ∖ A_g′|
    let a = c.holes().len();
    let b = c.codomain_complement().len();
    println!();
    println!(
        "|A′| = {a} = {} + {}",
        f.holes().len(),
        g.holes().difference(&f.codomain_complement()).len()
    );
    println!(
        "|B′| = {b} = {} + {}",
        g.codomain_complement().len(),
        f.codomain_complement().difference(g.holes()).len()
    );

    // Indices add along a whole chain.
    let chain = [
        PartialBijection::pure_shift(2),
        c.clone(),
        c.inverse(),
        PartialBijection::pure_shift(-3),
    ];
    let mut total = PartialBijection::identity();
    let mut sum = 0;
    for step in &chain {
        total = step.compose(&total);
        sum += step.index();
    }
    println!();
    println!(
        "chained index = {}, sum of step indices = {sum}",
        total.index()
    );
}
