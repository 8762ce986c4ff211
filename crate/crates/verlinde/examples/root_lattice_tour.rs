//! Tour of the root-system layer: positive roots, the Weyl group, level
//! alcoves, the central twist vector, and fundamental-domain reduction.
//!
//! Run with `cargo run --example root_lattice_tour`.

use verlinde::{
    build_root_system, central_element, chamber_valid, enumerate_alcove,
    reduce_to_fundamental_domain, Weight,
};

fn main() {
    let n = 3;
    let rs = build_root_system(n).unwrap();

    println!("SU({n}) root data");
    println!(
        "  {} positive roots (intervals of diagonal entries):",
        rs.n_plus
    );
    for gamma in &rs.positive_roots {
        println!("    entries {}..={}", gamma.lo, gamma.hi);
    }
    println!(
        "  rho = {:?} (fundamental coordinates), highest root spans {}..={}",
        rs.rho.fund, rs.gamma_max.lo, rs.gamma_max.hi
    );

    let weyl = rs.weyl_group();
    println!("\nWeyl group: {} permutations", weyl.len());
    for w in weyl.iter().take(3) {
        println!("    perm {:?} sign {:+}", w.perm, w.sign);
    }
    println!("    ...");

    // The level alcove at scale r: regular dominant weights with all
    // coordinates at least 1 summing below r.
    let r = 6;
    let alcove = enumerate_alcove(n, r).unwrap();
    println!("\nAlcove at scale r = {r}: {} points", alcove.len());
    for mu in &alcove {
        print!("  {:?}", mu.fund);
    }
    println!();

    // The central twist vector for degree d, and the fractional-part
    // reduction that folds arbitrary diagonal vectors back into [0, 1)^2
    // in simple-root coordinates.
    for d in [1, 2] {
        let c = central_element(n, d).unwrap();
        println!(
            "\nd = {d}: central vector, simple-root coordinates {:?}",
            c.simple_coords()
        );
        let shifted = c.add(&Weight::rho(n).to_tvector());
        let reduced = reduce_to_fundamental_domain(&shifted);
        println!(
            "  c + rho reduces to {:?}",
            reduced.simple_coords()
        );
    }

    // Chamber check: marked weights must keep every Weyl combination of
    // their rescalings strictly inside the unit box.
    let k = 6;
    for lam in [Weight::new(vec![2, 1]), Weight::new(vec![4, 2])] {
        let scaled = lam
            .to_tvector()
            .scale(&verlinde::Rat::new(1.into(), k.into()));
        let ok = chamber_valid(n, &[scaled]).unwrap();
        println!(
            "weight {:?} at level k = {k}: {}",
            lam.fund,
            if ok { "inside the open chamber" } else { "on or across a wall" }
        );
    }

    // Which weights are sums of roots: the Z/n coset label.
    println!("\nRoot-lattice coset labels (mod {n}):");
    for lam in [
        Weight::zero(n),
        Weight::new(vec![1, 0]),
        Weight::new(vec![0, 1]),
        Weight::new(vec![1, 1]),
    ] {
        println!("  {:?} -> {}", lam.fund, lam.root_lattice_class());
    }
}
