//! Section counts on closed surfaces: the basic two-route computation and
//! a sweep over levels.
//!
//! Run with `cargo run --example verlinde_basics`.

use verlinde::{alcove_sum_float, verlinde_by_residue, verlinde_number, ProblemSpec};

fn main() {
    // The classical degree-one rank-two values.
    println!("rank 2, twist degree 1, closed surface:");
    println!("  genus  level  alcove sum  residue route");
    for (g, k) in [(2u32, 2i64), (2, 4), (2, 6), (3, 2)] {
        let spec = ProblemSpec::new(2, 1, g, k, vec![]).unwrap();
        let by_sum = verlinde_number(&spec).unwrap();
        let by_res = verlinde_by_residue(&spec).unwrap();
        assert_eq!(by_sum, by_res);
        println!("  {g:>5}  {k:>5}  {by_sum:>10}  {by_res:>13}");
    }

    // Rank three, both admissible twist degrees.
    println!("\nrank 3, closed surface:");
    println!("  degree  genus  level  count");
    for d in [1i64, 2] {
        for (g, k) in [(2u32, 3i64), (2, 6), (3, 3)] {
            let spec = ProblemSpec::new(3, d, g, k, vec![]).unwrap();
            let v = verlinde_number(&spec).unwrap();
            assert_eq!(v, verlinde_by_residue(&spec).unwrap());
            println!("  {d:>6}  {g:>5}  {k:>5}  {v}");
        }
    }

    // Counts grow polynomially in the shifted level r = k + n, with degree
    // controlled by the moduli dimension; a quick look at the growth.
    println!("\nrank 2, genus 2 growth along the level:");
    for k in (2..=12i64).step_by(2) {
        let spec = ProblemSpec::new(2, 1, 2, k, vec![]).unwrap();
        println!("  k = {k:>2}: {}", verlinde_number(&spec).unwrap());
    }

    // A third, purely numerical evaluation of the same sum in fixed-point
    // complex arithmetic; the imaginary part collapses and the real part
    // lands on the integer.
    let spec = ProblemSpec::new(3, 1, 2, 6, vec![]).unwrap();
    let exact = verlinde_number(&spec).unwrap();
    let z = alcove_sum_float(&spec, 48).unwrap();
    println!(
        "\nrank 3, genus 2, level 6 at 48 digits: {:.6} + {:.1e} i (exact {exact})",
        z.re.to_f64(),
        z.im.to_f64()
    );
}
