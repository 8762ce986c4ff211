//! The truncated multivariate Laurent-series engine on its own: windows,
//! factor expansion, Bernoulli coefficients, and iterated residues.
//!
//! Run with `cargo run --example laurent_series_demo`.

use verlinde::series::bernoulli_numbers;
use verlinde::{expand_factor, Factor, Rat, Window};

fn one() -> Rat {
    Rat::new(1.into(), 1.into())
}

fn main() {
    // 1/(e^Y - 1) carries the Bernoulli numbers: coefficient of Y^(m-1)
    // is B_m / m!.
    let w1 = Window::symmetric(1, 8);
    let inv = expand_factor(&Factor::InvExpMinusOne(vec![one()]), &w1).unwrap();
    println!("1/(e^Y - 1) through Y^5:");
    for e in -1..=5i64 {
        println!("  Y^{e:>2}: {}", inv.coefficient(&[e]));
    }
    let bern: Vec<String> = bernoulli_numbers(8).iter().map(|b| b.to_string()).collect();
    println!("Bernoulli numbers B_0..B_8: [{}]", bern.join(", "));

    // The inverse doubled hyperbolic sine, an even-odd split of the same
    // data; squaring it matches expanding the square directly.
    let sinh1 = expand_factor(&Factor::InvTwoSinhHalfPow(vec![one()], 1), &w1).unwrap();
    let sinh2 = expand_factor(&Factor::InvTwoSinhHalfPow(vec![one()], 2), &w1).unwrap();
    assert_eq!(sinh1.mul(&sinh1).coefficient(&[-2]), sinh2.coefficient(&[-2]));
    assert_eq!(sinh1.mul(&sinh1).coefficient(&[0]), sinh2.coefficient(&[0]));
    println!("\n1/(2 sinh(Y/2)) starts with Y^-1 coefficient {}", sinh1.coefficient(&[-1]));
    println!("1/(2 sinh(Y/2))^2 starts with Y^-2 coefficient {}", sinh2.coefficient(&[-2]));

    // Two variables: a mixed linear form expands with the earliest variable
    // dominant, 1/(Y1 + Y2) = sum_m (-Y2)^m / Y1^(m+1).
    let w2 = Window::symmetric(2, 6);
    let zero = Rat::new(0.into(), 1.into());
    let mixed = expand_factor(&Factor::InvLinearPow(vec![one(), one()], 1), &w2).unwrap();
    println!("\n1/(Y1 + Y2) expanded (earliest variable dominant):");
    for (a, b) in [(-1i64, 0i64), (-2, 1), (-3, 2)] {
        println!("  Y1^{a} Y2^{b}: {}", mixed.coefficient(&[a, b]));
    }

    // Iterated residues: the fully antisymmetric kernel has residue zero,
    // while an exponential against 1/(Y1 Y2) picks out its constant.
    let f = expand_factor(&Factor::InvLinearPow(vec![one(), zero.clone()], 1), &w2)
        .unwrap()
        .mul(&expand_factor(&Factor::InvLinearPow(vec![zero, one()], 1), &w2).unwrap())
        .mul(&mixed);
    println!(
        "\niterated residue of 1/(Y1 Y2 (Y1 + Y2)) = {}",
        f.iterated_residue().unwrap()
    );

    let half = Rat::new(1.into(), 2.into());
    let third = Rat::new(1.into(), 3.into());
    let g = expand_factor(&Factor::Exp(vec![half.clone(), third.clone()]), &w2)
        .unwrap()
        .mul(
            &expand_factor(&Factor::InvLinearPow(vec![one(), Rat::new(0.into(), 1.into())], 2), &w2)
                .unwrap(),
        );
    // coefficient of Y1^{-1} picks the linear term of e^{Y1/2}: 1/2.
    println!(
        "residue in the first variable of e^(Y1/2 + Y2/3) / Y1^2 at Y1^-1 Y2^0: {}",
        g.coefficient(&[-1, 0])
    );
}
