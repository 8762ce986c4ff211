//! Exact arithmetic in cyclotomic fields: roots of unity, sine values as
//! algebraic numbers, inversion, and the collapse of rational-looking
//! combinations to actual rationals.
//!
//! Run with `cargo run --example cyclotomic_playground`.

use verlinde::{Cyclotomic, Rat};

fn main() {
    // zeta = e^{2 pi i / 5} and the golden-ratio combination
    // zeta + zeta^4 = 2 cos(2 pi / 5) = (sqrt(5) - 1) / 2.
    let golden = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 4));
    let (re, im) = golden.to_float(32);
    println!("zeta_5 + zeta_5^4 = {golden}");
    println!("  as a float: {re:.10} (imaginary part {im:.1e})");
    println!("  (sqrt(5) - 1) / 2 = {:.10}", (5f64.sqrt() - 1.0) / 2.0);

    // 2 sin(pi m / r) is exact in the 4r-th cyclotomic field.
    println!("\nExact doubled sines at r = 12:");
    for m in 1..=6 {
        let s = Cyclotomic::two_sin(m, 12).unwrap();
        let (re, _) = s.to_float(32);
        println!("  2 sin({m} pi / 12) = {re:.10}");
    }

    // Arithmetic closes: products of sines against their inverses cancel.
    let a = Cyclotomic::two_sin(1, 12).unwrap();
    let b = Cyclotomic::two_sin(5, 12).unwrap();
    let product = a.mul(&b);
    let back = product.div(&b).unwrap();
    println!("\n(2 sin(pi/12))(2 sin(5 pi/12)) = {product}");
    println!("  divided back by the second factor: {back}");
    assert_eq!(back, a);

    // A combination that collapses to an integer, certified exactly.
    // 2 sin(pi/12) * 2 sin(5 pi/12) = 1 exactly, so the product above is 1.
    match product.try_integer() {
        Ok(v) => println!("  certified integer: {v}"),
        Err(e) => println!("  not an integer: {e}"),
    }

    // Sums of all r-th roots of unity vanish.
    let mut total = Cyclotomic::from_int(0);
    for j in 0..7 {
        total = total.add(&Cyclotomic::root_of_unity(7, j));
    }
    println!("\nsum of all 7th roots of unity = {total} (is_zero: {})", total.is_zero());

    // e2pi accepts arbitrary rational turns.
    let eighth = Cyclotomic::e2pi(&Rat::new(1.into(), 8.into()));
    let (re, im) = eighth.to_float(32);
    println!("\ne^(2 pi i / 8) = {eighth}");
    println!("  = {re:.10} + {im:.10} i  (both coordinates are sqrt(2)/2)");
}
