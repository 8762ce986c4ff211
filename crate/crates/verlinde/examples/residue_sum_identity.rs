//! The bridge identity between the two routes: a sum of a Weyl-invariant
//! function over the scaled alcove equals an iterated-residue expression,
//! whenever the rescaled displacement is integral.
//!
//! Run with `cargo run --example residue_sum_identity`.

use verlinde::{central_element, vsz_identity_check, Rat, TVector};

fn rq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

fn main() {
    println!("rank 2, genus 2, both sides of the identity:");
    println!("  scale  displacement  residue side      alcove-sum side");
    for r in [2i64, 4, 6] {
        for num in [0i64, 1, 2, 3] {
            let nu = TVector::from_simple_coords(&[rq(num, 4)]);
            let (lhs, rhs) = vsz_identity_check(2, r, &nu, 2).unwrap();
            let integral = (rq(num, 4) * Rat::from_integer(r.into())).is_integer();
            let verdict = if lhs == rhs {
                "equal"
            } else {
                "NOT equal"
            };
            println!(
                "  r = {r}  nu = {num}/4{}  {verdict}: {lhs}  vs  {rhs}",
                if integral { "  (r nu integral)    " } else { "  (r nu fractional)  " }
            );
        }
    }
    println!(
        "\nThe identity needs every rescaled coordinate r*nu_j to be an\n\
         integer; at fractional displacements the sum side is generally not\n\
         even real, while the residue side is always rational."
    );

    // Rank three at the central displacements, genus 2 and 3.
    println!("\nrank 3, r = 6, central displacements:");
    for g in [2u32, 3] {
        for d in [1i64, 2] {
            let nu = central_element(3, d).unwrap();
            let (lhs, rhs) = vsz_identity_check(3, 6, &nu, g).unwrap();
            assert_eq!(lhs, rhs);
            println!("  g = {g}, d = {d}: both sides {lhs}");
        }
    }
}
