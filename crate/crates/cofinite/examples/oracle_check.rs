//! The window oracle: materialize a map as a plain table and recount
//! everything by brute force. Growing the window never changes an answer,
//! and the counts match the analytic formulas.

use std::collections::BTreeMap;

use cofinite::{compose_check, FiniteNatSet, PartialBijection, WindowTable};

fn main() {
    let f = PartialBijection::new(2, FiniteNatSet::singleton(1), BTreeMap::from([(0, 0)])).unwrap();
    let w = f.structural_bound();
    println!("f = {f}");
    println!("structural bound W = {w}");

    let table = WindowTable::materialize(&f, w).unwrap();
    print!("table: ");
    for (n, e) in table.entries().iter().enumerate() {
        match e {
            Some(v) => print!("{n}↦{v} "),
            None => print!("{n}↦· "),
        }
    }
    println!();

    println!();
    println!(
        "oracle A′ = {}   analytic A′ = {}",
        table.domain_complement(),
        f.holes()
    );
    println!(
        "oracle B′ = {}   analytic B′ = {}",
        table.codomain_complement(f.shift()),
        f.codomain_complement()
    );
    println!(
        "oracle index = {}   analytic index = {}",
        table.index(f.shift()),
        f.index()
    );

    // Doubling the window changes nothing.
    let wide = WindowTable::materialize(&f, 2 * w).unwrap();
    println!();
    println!(
        "at W = {}: index still {}, B′ still {}",
        2 * w,
        wide.index(f.shift()),
        wide.codomain_complement(f.shift())
    );

    // Composition validated pointwise against table lookups.
    let g = PartialBijection::pure_shift(-1);
    println!();
    println!(
        "compose_check(g, f) = {:?}",
        compose_check(&g, &f, 32).unwrap()
    );

    // Windows below the bound are refused rather than silently miscounting.
    println!(
        "undersized window: {}",
        WindowTable::materialize(&f, 3).unwrap_err()
    );
}
