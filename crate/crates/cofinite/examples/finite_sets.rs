//! The sorted-set layer everything else counts with, and the two-set
//! cardinality identity |X∖Y| + |Y| = |Y∖X| + |X| = |X∪Y|.

use cofinite::{card_identity_holds, FiniteNatSet};

fn main() {
    let x = FiniteNatSet::from(vec![0, 2, 4, 6]);
    let y = FiniteNatSet::from(vec![4, 5, 6, 7]);

    println!("X = {x}");
    println!("Y = {y}");
    println!("X ∪ Y = {}", x.union(&y));
    println!("X ∩ Y = {}", x.intersection(&y));
    println!("X ∖ Y = {}", x.difference(&y));
    println!("Y ∖ X = {}", y.difference(&x));

    println!();
    println!(
        "|X∖Y| + |Y| = {}   |Y∖X| + |X| = {}   |X∪Y| = {}",
        x.difference(&y).len() + y.len(),
        y.difference(&x).len() + x.len(),
        x.union(&y).len()
    );
    println!("identity holds: {}", card_identity_holds(&x, &y));

    // Input order and duplicates do not matter; the representation is
    // always sorted and strict.
    let z = FiniteNatSet::from(vec![9, 1, 9, 1, 5]);
    println!();
    println!("from [9,1,9,1,5]: {z}");

    println!("subset: {}", x.intersection(&y).is_subset_of(&x));
    println!(
        "disjoint from {{1, 3}}: {}",
        x.is_disjoint_from(&FiniteNatSet::from(vec![1, 3]))
    );
}
