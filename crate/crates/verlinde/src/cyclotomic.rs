//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is a dense rational coefficient vector over the powers
//! `zeta_N^j`, kept in canonical reduced form so that equality of values is
//! coefficient equality at a common order. The canonical exponent set
//! tensors one block per prime power `q = p^e` exactly dividing N: the CRT
//! component of an exponent for q is `t = j * (N/q)^{-1} mod q`, and only
//! `t < phi(q)` is kept; larger t are rewritten with the prime-power
//! minimal-polynomial relation
//! `zeta_q^{phi(q)+s} = -(zeta_q^s + zeta_q^{s+q/p} + ... + zeta_q^{s+(p-2)q/p})`.
//! Rewriting one prime's component never disturbs another's, so one pass per
//! prime reaches the canonical form, and a value is rational exactly when
//! only the exponent-0 coefficient survives.
//!
//! The constructors cover everything the exact engines need: roots of unity
//! `e^{2 pi i t}`, the positive sines `2 sin(pi m / r)`, and integer square
//! roots via quadratic Gauss sums. Inversion is exact, by multiplying the
//! Galois conjugates and dividing by the rational norm.

use crate::bigfixed::{bits_for_digits, BigFixed, ComplexFixed};
use crate::error::{Error, Result};
use crate::Rat;
use num::integer::lcm;
use num::{BigInt, One, ToPrimitive, Zero};
use std::fmt;

/// An element of Q(zeta_order), always in canonical reduced form.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rat>,
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn modinv(a: u64, m: u64) -> u64 {
    let (g, x, _) = egcd((a % m) as i64, m as i64);
    debug_assert_eq!(g, 1, "modular inverse requires coprime arguments");
    x.rem_euclid(m as i64) as u64
}

fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    base = 0;
    let _ = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// The prime-power factorization of n as `(p, p^e)` pairs.
fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1u64;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    prime_powers(n).iter().fold(n.max(1), |acc, &(p, _)| acc / p * (p - 1))
}

/// The canonical exponents at a given order; their count is phi(order).
pub fn canonical_exponents(order: u64) -> Vec<u64> {
    let pps = prime_powers(order);
    (0..order)
        .filter(|&j| {
            pps.iter().all(|&(p, q)| {
                let eta = modinv((order / q) % q, q);
                let t = (j as u128 * eta as u128 % q as u128) as u64;
                t < q - q / p
            })
        })
        .collect()
}

/// Rewrite the coefficient vector into canonical form, in place.
fn reduce(order: u64, coeffs: &mut [Rat]) {
    for (p, q) in prime_powers(order) {
        let nq = order / q;
        let eta = modinv(nq % q, q);
        let phi = q - q / p;
        let step = q / p;
        for j in 0..order as usize {
            if coeffs[j].is_zero() {
                continue;
            }
            let t = (j as u128 * eta as u128 % q as u128) as u64;
            if t < phi {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[j], Rat::zero());
            let s = t - phi; // in [0, q/p)
            for u in 0..p - 1 {
                let tp = s + u * step;
                let delta = (tp + q - t) % q;
                let jn = ((j as u64 + delta * nq) % order) as usize;
                coeffs[jn] -= &c;
            }
        }
    }
}

impl Cyclotomic {
    fn reduced(order: u64, mut coeffs: Vec<Rat>) -> Self {
        debug_assert!(order >= 1);
        debug_assert_eq!(coeffs.len(), order as usize);
        reduce(order, &mut coeffs);
        Cyclotomic { order, coeffs }
    }

    /// The zero element, carried at the given order.
    pub fn zero(order: u64) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![Rat::zero(); order as usize],
        }
    }

    /// The unit element, carried at the given order.
    pub fn one(order: u64) -> Self {
        Self::from_rat_at(order, Rat::one())
    }

    /// A rational value, carried at order 1.
    pub fn rational(c: Rat) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![c],
        }
    }

    /// An integer value, carried at order 1.
    pub fn from_int(k: i64) -> Self {
        Self::rational(Rat::from_integer(BigInt::from(k)))
    }

    fn from_rat_at(order: u64, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); order as usize];
        coeffs[0] = c;
        Cyclotomic { order, coeffs }
    }

    /// `zeta_order^exp`, any integer exponent.
    pub fn root_of_unity(order: u64, exp: i64) -> Self {
        let mut coeffs = vec![Rat::zero(); order as usize];
        let e = exp.rem_euclid(order as i64) as usize;
        coeffs[e] = Rat::one();
        Self::reduced(order, coeffs)
    }

    /// `e^{2 pi i t}` for an exact rational t: a root of unity whose order
    /// is the denominator of t mod 1.
    pub fn e2pi(t: &Rat) -> Self {
        let f = t - t.floor();
        let den = f
            .denom()
            .to_u64()
            .expect("phase denominator exceeds u64 range");
        let num = f
            .numer()
            .to_i64()
            .expect("phase numerator exceeds i64 range");
        Self::root_of_unity(den, num)
    }

    /// The exact positive value `2 sin(pi m / r)` for `0 < m < r`, realized
    /// as `zeta_{4r}^{2m-r} + zeta_{4r}^{r-2m}`.
    pub fn two_sin(m: i64, r: i64) -> Result<Self> {
        if r < 2 || m <= 0 || m >= r {
            return Err(Error::Validation(format!(
                "two_sin(m, r) requires 0 < m < r, got m = {m}, r = {r}"
            )));
        }
        let order = 4 * r as u64;
        let e1 = (2 * m - r).rem_euclid(4 * r) as usize;
        let e2 = (r - 2 * m).rem_euclid(4 * r) as usize;
        let mut coeffs = vec![Rat::zero(); order as usize];
        coeffs[e1] += Rat::one();
        coeffs[e2] += Rat::one();
        Ok(Self::reduced(order, coeffs))
    }

    /// The exact nonnegative square root of an integer, via quadratic Gauss
    /// sums: `sqrt(2) = zeta_8 + zeta_8^7`; for odd primes p the sum
    /// `g_p = sum_a (a|p) zeta_p^a` equals `sqrt(p)` when `p = 1 mod 4` and
    /// `i sqrt(p)` when `p = 3 mod 4`, so `sqrt(p) = zeta_4^3 g_p` there.
    pub fn sqrt_int(m: u64) -> Self {
        if m == 0 {
            return Self::zero(1);
        }
        let mut square = 1u64;
        let mut free = Vec::new();
        for (p, q) in prime_powers(m) {
            let mut e = 0u32;
            let mut qq = q;
            while qq > 1 {
                qq /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free.push(p);
            }
        }
        let mut acc = Self::rational(Rat::from_integer(BigInt::from(square)));
        for p in free {
            let factor = if p == 2 {
                let mut coeffs = vec![Rat::zero(); 8];
                coeffs[1] = Rat::one();
                coeffs[7] = Rat::one();
                Self::reduced(8, coeffs)
            } else {
                let mut coeffs = vec![Rat::zero(); p as usize];
                for a in 1..p {
                    let ls = modpow(a, (p - 1) / 2, p);
                    coeffs[a as usize] = if ls == 1 { Rat::one() } else { -Rat::one() };
                }
                let g = Self::reduced(p, coeffs);
                if p % 4 == 1 {
                    g
                } else {
                    g.mul(&Self::root_of_unity(4, 3))
                }
            };
            acc = acc.mul(&factor);
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, when the element is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Extract an integer value, or report what the value actually was.
    pub fn expect_integer(&self, what: &str) -> Result<BigInt> {
        match self.as_rational() {
            Some(c) if c.is_integer() => Ok(c.to_integer()),
            _ => Err(Error::NotAnInteger(format!(
                "{what} evaluated to {self}, which is not an integer"
            ))),
        }
    }

    /// The integer a canonical-form value has collapsed to, or an
    /// integrality-failure error carrying the offending value.
    pub fn try_integer(&self) -> Result<BigInt> {
        self.expect_integer("the value")
    }

    /// Evaluation at the primitive root of unity as a pair
    /// `(real, imaginary)` of machine floats, computed through fixed-point
    /// arithmetic at the requested decimal precision before the final
    /// rounding (for precision beyond machine floats, use `to_complex`).
    pub fn to_float(&self, digits: u32) -> (f64, f64) {
        let z = self.to_complex(digits);
        (z.re.to_f64(), z.im.to_f64())
    }

    /// Nonzero terms mapped to exponents at a larger order (which must be a
    /// multiple of this element's order).
    fn terms_at(&self, order: u64) -> Vec<(usize, &Rat)> {
        debug_assert_eq!(order % self.order, 0);
        let f = (order / self.order) as usize;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j * f, c))
            .collect()
    }

    /// The same value carried at a multiple of the current order.
    pub fn lift(&self, order: u64) -> Result<Self> {
        if order % self.order != 0 {
            return Err(Error::Validation(format!(
                "cannot lift an order-{} element to order {order}: not a multiple",
                self.order
            )));
        }
        let mut coeffs = vec![Rat::zero(); order as usize];
        for (e, c) in self.terms_at(order) {
            coeffs[e] += c;
        }
        Ok(Self::reduced(order, coeffs))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = lcm(self.order, other.order);
        let mut coeffs = vec![Rat::zero(); order as usize];
        for (e, c) in self.terms_at(order) {
            coeffs[e] += c;
        }
        for (e, c) in other.terms_at(order) {
            coeffs[e] += c;
        }
        Self::reduced(order, coeffs)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = lcm(self.order, other.order);
        let n = order as usize;
        let mut coeffs = vec![Rat::zero(); n];
        let a = self.terms_at(order);
        let b = other.terms_at(order);
        for &(e1, c1) in &a {
            for &(e2, c2) in &b {
                coeffs[(e1 + e2) % n] += c1 * c2;
            }
        }
        Self::reduced(order, coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The Galois image under `zeta -> zeta^u`; u must be a unit mod order.
    fn galois(&self, u: u64) -> Self {
        let n = self.order as usize;
        let mut coeffs = vec![Rat::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(j as u64 * u % self.order) as usize] += c;
            }
        }
        Self::reduced(self.order, coeffs)
    }

    /// Exact inverse: the product of the other Galois conjugates divided by
    /// the rational norm.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_rational() {
            return Ok(Self::from_rat_at(self.order, c.recip()));
        }
        let n = self.order;
        let mut prod = Self::one(n);
        for u in 2..n {
            if num::integer::gcd(u, n) == 1 {
                prod = prod.mul(&self.galois(u));
            }
        }
        let norm = self
            .mul(&prod)
            .as_rational()
            .expect("the product of all Galois conjugates must be rational");
        debug_assert!(!norm.is_zero());
        Ok(prod.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Numerical value as a fixed-point complex number with the requested
    /// decimal precision.
    pub fn to_complex(&self, digits: u32) -> ComplexFixed {
        let bits = bits_for_digits(digits);
        let mut re = BigFixed::zero(bits);
        let mut im = BigFixed::zero(bits);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = Rat::new(BigInt::from(j), BigInt::from(self.order));
            let (s, co) = BigFixed::sin_cos_two_pi(&t, bits);
            let cf = BigFixed::from_rat(c, bits);
            re = re.add(&co.mul(&cf));
            im = im.add(&s.mul(&cf));
        }
        ComplexFixed { re, im }
    }

    /// Numerical value as a machine-precision `(re, im)` pair.
    pub fn to_f64(&self) -> (f64, f64) {
        let z = self.to_complex(24);
        (z.re.to_f64(), z.im.to_f64())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{j}", self.order)?;
            } else {
                write!(f, "({c})z{}^{j}", self.order)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{rat, rat_int};
    use proptest::prelude::*;

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn canonical_basis_has_totient_size() {
        for order in [1u64, 2, 3, 4, 6, 8, 9, 12, 24, 36] {
            assert_eq!(canonical_exponents(order).len() as u64, euler_phi(order));
        }
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(8), 4);
    }

    #[test]
    fn minus_one_and_sixth_roots_reduce() {
        let m1 = Cyclotomic::root_of_unity(2, 1);
        assert_eq!(m1, Cyclotomic::from_int(-1));
        // zeta_6 = -zeta_3^2
        let z6 = Cyclotomic::root_of_unity(6, 1);
        let z3 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z6, z3.neg());
        // zeta_8^4 = -1 at order 8
        let z = Cyclotomic::root_of_unity(8, 4);
        assert_eq!(z, Cyclotomic::from_int(-1));
    }

    #[test]
    fn sum_of_all_pth_roots_vanishes() {
        for p in [2u64, 3, 5, 7, 9] {
            let mut acc = Cyclotomic::zero(p);
            for j in 0..p as i64 {
                acc = acc.add(&Cyclotomic::root_of_unity(p, j));
            }
            assert!(acc.is_zero(), "order {p}");
        }
    }

    #[test]
    fn two_sin_exact_values() {
        assert_eq!(
            Cyclotomic::two_sin(1, 2).unwrap(),
            Cyclotomic::from_int(2)
        );
        assert_eq!(
            Cyclotomic::two_sin(1, 6).unwrap(),
            Cyclotomic::from_int(1)
        );
        let s = Cyclotomic::two_sin(1, 4).unwrap();
        assert_eq!(s.mul(&s), Cyclotomic::from_int(2));
        let s = Cyclotomic::two_sin(1, 3).unwrap();
        assert_eq!(s.mul(&s), Cyclotomic::from_int(3));
        // symmetry about the midpoint
        for r in 2..9 {
            for m in 1..r {
                assert_eq!(
                    Cyclotomic::two_sin(m, r).unwrap(),
                    Cyclotomic::two_sin(r - m, r).unwrap()
                );
            }
        }
        assert!(Cyclotomic::two_sin(0, 4).is_err());
        assert!(Cyclotomic::two_sin(4, 4).is_err());
    }

    #[test]
    fn two_sin_matches_floating_point() {
        for r in 2..10i64 {
            for m in 1..r {
                let v = Cyclotomic::two_sin(m, r).unwrap().to_f64();
                close(v.0, 2.0 * (std::f64::consts::PI * m as f64 / r as f64).sin());
                close(v.1, 0.0);
            }
        }
    }

    #[test]
    fn square_roots_square_back() {
        for m in 0..=30u64 {
            let s = Cyclotomic::sqrt_int(m);
            assert_eq!(s.mul(&s), Cyclotomic::from_int(m as i64), "m = {m}");
            let (re, im) = s.to_f64();
            close(re, (m as f64).sqrt());
            close(im, 0.0);
        }
        assert_eq!(Cyclotomic::sqrt_int(4), Cyclotomic::from_int(2));
        assert_eq!(
            Cyclotomic::sqrt_int(45),
            Cyclotomic::sqrt_int(5).scale(&rat_int(3))
        );
    }

    #[test]
    fn golden_ratio_appears_at_order_five() {
        let g = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 4));
        let (re, im) = g.to_f64();
        close(re, 0.618033988749894);
        close(im, 0.0);
        // 1/g = g + 1
        let inv = g.invert().unwrap();
        assert_eq!(inv, g.add(&Cyclotomic::from_int(1)));
    }

    #[test]
    fn phases_compose() {
        assert_eq!(Cyclotomic::e2pi(&rat(1, 2)), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::e2pi(&rat_int(5)), Cyclotomic::from_int(1));
        assert_eq!(Cyclotomic::e2pi(&rat(-1, 3)), Cyclotomic::root_of_unity(3, 2));
        let a = Cyclotomic::e2pi(&rat(1, 8));
        let b = Cyclotomic::e2pi(&rat(3, 8));
        assert_eq!(a.mul(&b), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::e2pi(&rat(1, 3)).pow(3), Cyclotomic::from_int(1));
    }

    #[test]
    fn inversion_of_sines_and_roots() {
        for r in 2..9i64 {
            for m in 1..r {
                let s = Cyclotomic::two_sin(m, r).unwrap();
                let inv = s.invert().unwrap();
                assert_eq!(s.mul(&inv), Cyclotomic::from_int(1));
            }
        }
        let s2 = Cyclotomic::sqrt_int(2);
        assert_eq!(s2.invert().unwrap(), s2.scale(&rat(1, 2)));
        assert!(Cyclotomic::zero(4).invert().is_err());
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(
            Cyclotomic::from_int(6).expect_integer("test").unwrap(),
            BigInt::from(6)
        );
        assert!(Cyclotomic::rational(rat(1, 2))
            .expect_integer("test")
            .is_err());
        assert!(Cyclotomic::root_of_unity(3, 1)
            .expect_integer("test")
            .is_err());
        // a disguised integer: zeta_3 + zeta_3^2 = -1
        let v = Cyclotomic::root_of_unity(3, 1).add(&Cyclotomic::root_of_unity(3, 2));
        assert_eq!(v.expect_integer("test").unwrap(), BigInt::from(-1));
    }

    #[test]
    fn lift_preserves_value() {
        let x = Cyclotomic::two_sin(1, 4).unwrap(); // order 16
        let y = x.lift(48).unwrap();
        assert_eq!(x, y);
        assert!(x.lift(15).is_err());
    }

    fn arb_element() -> impl Strategy<Value = Cyclotomic> {
        proptest::collection::vec((-3i64..=3, 1i64..=2), 12).prop_map(|v| {
            let mut acc = Cyclotomic::zero(12);
            for (j, (p, q)) in v.into_iter().enumerate() {
                if p != 0 {
                    acc = acc.add(&Cyclotomic::root_of_unity(12, j as i64).scale(&rat(p, q)));
                }
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn field_axioms(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), Cyclotomic::zero(1));
        }

        #[test]
        fn nonzero_elements_invert(a in arb_element()) {
            prop_assume!(!a.is_zero());
            let inv = a.invert().unwrap();
            prop_assert_eq!(a.mul(&inv), Cyclotomic::from_int(1));
        }

        #[test]
        fn lifting_is_transparent(a in arb_element()) {
            let lifted = a.lift(36).unwrap();
            prop_assert_eq!(&lifted, &a);
            prop_assert_eq!(lifted.mul(&a), a.mul(&a));
        }
    }
}
