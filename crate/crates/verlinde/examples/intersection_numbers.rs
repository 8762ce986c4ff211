//! Intersection pairings on the rank-two moduli space at scale one, and
//! how weighted combinations of them interpolate the section counts.
//!
//! Run with `cargo run --example intersection_numbers`.

use verlinde::{expand_factor, intersection_pairing, Factor, Rat, TVector, TauPoly, Window};

fn rq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

fn main() {
    // Pairings of powers of the degree-two generator on the genus-2 space.
    let one = TauPoly::one(2);
    let tau2 = TauPoly::generator(2, 2).unwrap();
    println!("rank 2, genus 2, scale-one pairings:");
    for (label, q) in [
        ("1      ", one.clone()),
        ("tau2   ", tau2.clone()),
        ("tau2^2 ", tau2.pow(2)),
        ("tau2^3 ", tau2.pow(3)),
    ] {
        println!(
            "  <{label}> = {}",
            intersection_pairing(2, 1, 2, &q, None).unwrap()
        );
    }

    // Displaced pairings sweep out a polynomial in the displacement; for
    // the unit class it is x/3 - 2x^3/3.
    println!("\ndisplaced unit pairings (closed form x/3 - 2x^3/3):");
    for (p, q) in [(1i64, 8i64), (1, 4), (3, 8)] {
        let nu = TVector::from_simple_coords(&[rq(p, q)]);
        let v = intersection_pairing(2, 1, 2, &one, Some(&nu)).unwrap();
        let x = rq(p, q);
        let direct = &x / rq(3, 1) - rq(2, 3) * &x * &x * &x;
        println!("  x = {p}/{q}: pairing {v}, closed form {direct}");
        assert_eq!(v, direct);
    }

    // The degree-lowering weights read off the inverse sinh-square series
    // turn the pairings into the actual section counts at each scale.
    let w = Window::symmetric(1, 6);
    let h = expand_factor(&Factor::InvTwoSinhHalfPow(vec![Rat::new(1.into(), 1.into())], 2), &w)
        .unwrap();
    let weights: Vec<Rat> = (0..4)
        .map(|j| h.coefficient(&[2 * j - 2]) * Rat::from_integer((-4i64).pow(j as u32).into()))
        .collect();
    let shown: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    println!("\ninterpolation weights: [{}]", shown.join(", "));
    let pairings: Vec<Rat> = (0..4)
        .map(|j| intersection_pairing(2, 1, 2, &tau2.pow(j), None).unwrap())
        .collect();
    println!("shifted level -> interpolated count:");
    for r in [4i64, 6, 8] {
        let mut total = Rat::new(0.into(), 1.into());
        for j in 0..4usize {
            total += &weights[j] * &pairings[j] * Rat::from_integer(r.into()).pow(3 - 2 * j as i32);
        }
        println!("  r = {r}: {total}");
    }
}
