//! Identifying maps that differ at finitely many points collapses each one
//! to its germ: the eventual shift. Germs form a group isomorphic to ℤ, the
//! index descends to the homomorphism Ind, and Ind splits.

use std::collections::BTreeMap;

use cofinite::{FiniteNatSet, GermClass, PartialBijection};

fn main() {
    let u = PartialBijection::pure_shift(1);
    let u_class = GermClass::of(&u);
    println!("[u] = {u_class}, Ind = {}", u_class.ind());

    // Finite tampering does not move the class.
    let tampered = u.restrict(&FiniteNatSet::from(vec![0, 9])).compose(
        &PartialBijection::new(0, FiniteNatSet::empty(), BTreeMap::from([(3, 4), (4, 3)])).unwrap(),
    );
    println!("tampered = {tampered}");
    println!("same class: {}", GermClass::of(&tampered) == u_class);

    // Classes multiply by adding shifts; Ind is a homomorphism onto ℤ.
    let a = GermClass::from_shift(3);
    let b = GermClass::from_shift(-5);
    println!();
    println!("{a} · {b} = {}", a.mul(&b));
    println!(
        "Ind({a}) + Ind({b}) = {} = Ind of the product",
        a.ind() + b.ind()
    );
    println!("{a}⁻¹ = {}", a.inv());

    // The splitting section: n ↦ [u]^(-n), a right inverse of Ind.
    println!();
    for n in [-2i64, 0, 1, 7] {
        let s = GermClass::section(n);
        println!("section({n}) = {s}, Ind = {}", s.ind());
    }

    // Each class owns a canonical representative, the pure shift.
    println!();
    for k in [-2i64, 0, 2] {
        let rep = GermClass::from_shift(k).representative();
        println!(
            "representative of germ({k:+}): {rep}   index {}",
            rep.index()
        );
    }
}
