//! Total self-maps that fail to be bijective at finitely many points, the
//! older index they carry, and how restriction reconciles it with the
//! partial-bijection index.

use cofinite::NearBijection;

fn main() {
    // f(0) = 3 and f(n) = n + 1 beyond the prefix, so f(2) = 3 collides
    // with f(0), and 0, 1 are never hit.
    let f = NearBijection::new(vec![3], 1).unwrap();
    println!("f: {f}");
    for n in 0..6 {
        print!("f({n}) = {}  ", f.apply(n));
    }
    println!();

    let mono = f.monoset_complement();
    let range = f.range_complement();
    println!();
    println!("Ω_f′  = {mono}   (points sharing their value)");
    println!("f(Ω)′ = {range}   (points never hit)");
    println!("legacy index = {}", f.legacy_index());

    // Throwing the collision points out of the domain leaves an honest
    // partial bijection with the same index.
    let r = f.restrict_to_partial();
    println!();
    println!("restriction: {r}");
    println!("restriction index = {}", r.index());

    // |f(Ω_f)′| = |f(Ω)′| + |f(Ω_f′)| holds for every near-bijection.
    println!(
        "reconciliation identity holds: {}",
        f.reconciliation_check()
    );

    // A messier map: three prefix points pile onto 0, then shift +2.
    let g = NearBijection::new(vec![0, 0, 0, 9], 2).unwrap();
    println!();
    println!("g: {g}");
    println!(
        "Ω_g′ = {}, g(Ω)′ = {}",
        g.monoset_complement(),
        g.range_complement()
    );
    println!(
        "legacy index = {} = restriction index {}",
        g.legacy_index(),
        g.restrict_to_partial().index()
    );
}
