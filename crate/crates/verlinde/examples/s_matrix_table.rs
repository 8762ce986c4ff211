//! The modular data entering the section counts: diagonal sine statistics,
//! the pairing statistic against marked weights, and the central phase,
//! tabulated over a small alcove.
//!
//! Run with `cargo run --example s_matrix_table`.

use verlinde::{central_phase, enumerate_alcove, s_pair, s_zero, Weight};

fn main() {
    // Rank two at scale r = 4 (level k = 2).
    let (n, r, d) = (2usize, 4i64, 1i64);
    let alcove = enumerate_alcove(n, r).unwrap();
    println!("n = {n}, r = {r}: alcove {:?}", alcove.iter().map(|m| &m.fund).collect::<Vec<_>>());

    println!("\ndiagonal statistic s_zero(mu):");
    for mu in &alcove {
        let s = s_zero(n, r, mu).unwrap();
        let (re, _) = s.to_float(32);
        println!("  mu = {:?}:  {s}  ~ {re:.6}", mu.fund);
    }

    println!("\npairing statistic s_pair(lambda, mu):");
    for level in 0..=2i64 {
        let lam = Weight::new(vec![level]);
        for mu in &alcove {
            let s = s_pair(n, r, &lam, mu).unwrap();
            let (re, _) = s.to_float(32);
            println!("  lambda = {:?}, mu = {:?}:  {re:+.6}", lam.fund, mu.fund);
        }
    }

    // The zero weight reproduces the diagonal statistic exactly.
    let zero = Weight::zero(n);
    for mu in &alcove {
        assert_eq!(
            s_pair(n, r, &zero, mu).unwrap(),
            s_zero(n, r, mu).unwrap()
        );
    }
    println!("\ns_pair(0, mu) = s_zero(mu) exactly on the whole alcove.");

    println!("\ncentral phase (d = {d}):");
    for mu in &alcove {
        let p = central_phase(n, d, mu).unwrap();
        println!("  mu = {:?}:  {p}", mu.fund);
    }

    // Rank three: the unitarity of the diagonal row, exactly.
    let (n, r) = (3usize, 6i64);
    let alcove = enumerate_alcove(n, r).unwrap();
    let mut total = verlinde::Cyclotomic::from_int(0);
    for mu in &alcove {
        let s = s_zero(n, r, mu).unwrap();
        total = total.add(&s.mul(&s));
    }
    println!(
        "\nn = {n}, r = {r}: sum over the alcove of s_zero(mu)^2 = {total} \
         (certified: {})",
        total.try_integer().unwrap()
    );
}
