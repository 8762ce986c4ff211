//! Marked points: section counts for surfaces with boundary weights, the
//! chamber constraint on those weights, and the reductions that tie the
//! parabolic counts back to the closed-surface ones.
//!
//! Run with `cargo run --example parabolic_points`.

use verlinde::{
    parabolic_multi_point, parabolic_one_point, verlinde_number, Error, ProblemSpec, Weight,
};

fn main() {
    // One marked point on a genus-2 surface, rank two, level 2.  Odd
    // weights lie outside the root lattice, so their counts vanish.
    println!("rank 2, genus 2, level 2, one marked point:");
    for m in 0..=2i64 {
        let v = parabolic_one_point(2, 1, 2, 2, Weight::new(vec![m])).unwrap();
        println!("  weight [{m}]: {v}");
    }

    // Two marked points; the count only depends on the weight multiset.
    let pair = parabolic_multi_point(
        2,
        1,
        2,
        2,
        vec![Weight::new(vec![1]), Weight::new(vec![1])],
    )
    .unwrap();
    println!("\ntwo marked points with weight [1] each: {pair}");

    // Zero weights change nothing: the marked surface remembers only the
    // underlying closed one.
    let closed = verlinde_number(&ProblemSpec::new(2, 1, 2, 2, vec![]).unwrap()).unwrap();
    let marked = parabolic_multi_point(2, 1, 2, 2, vec![Weight::zero(2); 2]).unwrap();
    println!("\nclosed-surface count {closed}, with two zero-weight points {marked}");
    assert_eq!(closed, marked);

    // Weights above the level are rejected, and so are weight combinations
    // whose Weyl translates can reach a wall of the unit box.
    println!("\nrejections:");
    match ProblemSpec::new(2, 1, 2, 2, vec![Weight::new(vec![3])]) {
        Err(Error::Validation(msg)) => println!("  weight [3]: {msg}"),
        other => println!("  weight [3]: unexpected {other:?}"),
    }
    match ProblemSpec::new(2, 1, 2, 2, vec![Weight::new(vec![2]), Weight::new(vec![2])]) {
        Err(Error::Validation(msg)) => println!("  weights [2], [2]: {msg}"),
        other => println!("  weights [2], [2]: unexpected {other:?}"),
    }

    // Rank three with marked weights at level 6.  Counts vanish outright
    // unless the total marked weight is a sum of roots (coset label 0).
    println!("\nrank 3, genus 2, level 6, one marked point:");
    for lam in [
        Weight::new(vec![1, 1]),
        Weight::new(vec![2, 2]),
        Weight::new(vec![2, 1]),
        Weight::new(vec![1, 2]),
    ] {
        let class = lam.root_lattice_class();
        let v = parabolic_one_point(3, 1, 2, 6, lam.clone()).unwrap();
        println!("  weight {:?} (coset label {class}): {v}", lam.fund);
    }
}
