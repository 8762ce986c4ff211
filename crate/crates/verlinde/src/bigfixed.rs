//! Arbitrary-precision binary fixed-point arithmetic.
//!
//! A value is `mant / 2^bits` with a big-integer mantissa. This is the
//! numeric backend for the floating verification path: pi comes from
//! Machin's formula evaluated in integer arithmetic, trigonometric values
//! from Taylor series on a quadrant-reduced argument, and square roots from
//! the integer square root. Precision is chosen per computation; results are
//! truncated, with generous internal guard bits.

use crate::Rat;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

/// Working bits for a requested number of decimal digits (10/3 bits per
/// digit, rounded up by a safety margin).
pub(crate) fn bits_for_digits(digits: u32) -> u32 {
    digits * 10 / 3 + 64
}

/// A fixed-point real number `mant / 2^bits`.
#[derive(Clone, Debug)]
pub struct BigFixed {
    mant: BigInt,
    bits: u32,
}

impl BigFixed {
    pub fn zero(bits: u32) -> Self {
        BigFixed {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        BigFixed {
            mant: BigInt::one() << bits,
            bits,
        }
    }

    pub fn from_int(k: i64, bits: u32) -> Self {
        BigFixed {
            mant: BigInt::from(k) << bits,
            bits,
        }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Self {
        BigFixed {
            mant: (r.numer() << bits) / r.denom(),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFixed {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Self {
        BigFixed {
            mant: -&self.mant,
            bits: self.bits,
        }
    }

    fn aligned(&self, bits: u32) -> BigInt {
        if bits >= self.bits {
            &self.mant << (bits - self.bits)
        } else {
            &self.mant >> (self.bits - bits)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        BigFixed {
            mant: self.aligned(bits) + other.aligned(bits),
            bits,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        BigFixed {
            mant: (self.aligned(bits) * other.aligned(bits)) >> bits,
            bits,
        }
    }

    /// Division; the divisor must be nonzero.
    pub fn div(&self, other: &Self) -> Self {
        let bits = self.bits.max(other.bits);
        BigFixed {
            mant: (self.aligned(bits) << bits) / other.aligned(bits),
            bits,
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        BigFixed {
            mant: &self.mant * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        BigFixed {
            mant: &self.mant / k,
            bits: self.bits,
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::one(self.bits);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Square root of a nonnegative value, via the integer square root of
    /// the mantissa shifted to double precision.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative value");
        BigFixed {
            mant: (&self.mant << self.bits).sqrt(),
            bits: self.bits,
        }
    }

    /// Nearest integer (ties toward positive infinity).
    pub fn round_to_int(&self) -> BigInt {
        (&self.mant + (BigInt::one() << (self.bits - 1))) >> self.bits
    }

    pub fn to_f64(&self) -> f64 {
        Rat::new(self.mant.clone(), BigInt::one() << self.bits)
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Decimal rendering with the given number of fractional digits
    /// (truncated toward zero).
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let neg = self.mant.is_negative();
        let m = self.mant.abs();
        let int = &m >> self.bits;
        let mut rem = &m - (&int << self.bits);
        let mut frac = String::new();
        for _ in 0..frac_digits {
            rem *= 10;
            let d = &rem >> self.bits;
            frac.push_str(&d.to_string());
            rem -= &d << self.bits;
        }
        let sign = if neg { "-" } else { "" };
        if frac_digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    fn truncate_to(&self, bits: u32) -> Self {
        BigFixed {
            mant: self.aligned(bits),
            bits,
        }
    }

    /// `atan(1/x) * 2^bits`, truncated, by the alternating inverse-power
    /// series.
    fn atan_inv(x: i64, bits: u32) -> BigInt {
        let mut result = BigInt::zero();
        let mut power = (BigInt::one() << bits) / x;
        let x2 = BigInt::from(x) * x;
        let mut k = 0i64;
        while !power.is_zero() {
            let term = &power / (2 * k + 1);
            if k % 2 == 0 {
                result += &term;
            } else {
                result -= &term;
            }
            power /= &x2;
            k += 1;
        }
        result
    }

    /// pi from Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(bits: u32) -> Self {
        let guard = 32;
        let b = bits + guard;
        let mant = Self::atan_inv(5, b) * 16 - Self::atan_inv(239, b) * 4;
        BigFixed { mant, bits: b }.truncate_to(bits)
    }

    /// Exact-argument trigonometry: `(sin, cos)` of `2 pi t` for rational t.
    /// The argument is reduced mod 1, split into a quadrant and a remainder
    /// in `[0, pi/2)`, and the remainder is fed to Taylor series.
    pub fn sin_cos_two_pi(t: &Rat, bits: u32) -> (Self, Self) {
        let guard = 48;
        let b = bits + guard;
        let f = t - t.floor();
        let q = (&f * Rat::from_integer(BigInt::from(4)))
            .floor()
            .to_integer()
            .to_u8()
            .expect("quadrant in 0..4");
        let theta_frac = &f - Rat::new(BigInt::from(q), BigInt::from(4));
        let two_pi = Self::pi(b).mul_int(2);
        let theta = two_pi.mul(&Self::from_rat(&theta_frac, b));
        let theta2 = theta.mul(&theta);

        // sin = sum (-1)^k theta^{2k+1} / (2k+1)!
        let mut sin = Self::zero(b);
        let mut term = theta.clone();
        let mut k = 0i64;
        while !term.is_zero() {
            if k % 2 == 0 {
                sin = sin.add(&term);
            } else {
                sin = sin.sub(&term);
            }
            term = term.mul(&theta2).div_int((2 * k + 2) * (2 * k + 3));
            k += 1;
        }

        // cos = sum (-1)^k theta^{2k} / (2k)!
        let mut cos = Self::zero(b);
        let mut term = Self::one(b);
        let mut k = 0i64;
        while !term.is_zero() {
            if k % 2 == 0 {
                cos = cos.add(&term);
            } else {
                cos = cos.sub(&term);
            }
            term = term.mul(&theta2).div_int((2 * k + 1) * (2 * k + 2));
            k += 1;
        }

        let (s, c) = match q {
            0 => (sin, cos),
            1 => (cos, sin.neg()),
            2 => (sin.neg(), cos.neg()),
            _ => (cos.neg(), sin),
        };
        (s.truncate_to(bits), c.truncate_to(bits))
    }
}

impl PartialEq for BigFixed {
    fn eq(&self, other: &Self) -> bool {
        let bits = self.bits.max(other.bits);
        self.aligned(bits) == other.aligned(bits)
    }
}

impl PartialOrd for BigFixed {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        let bits = self.bits.max(other.bits);
        self.aligned(bits).partial_cmp(&other.aligned(bits))
    }
}

/// A complex number with fixed-point parts.
#[derive(Clone, Debug)]
pub struct ComplexFixed {
    pub re: BigFixed,
    pub im: BigFixed,
}

impl ComplexFixed {
    pub fn zero(bits: u32) -> Self {
        ComplexFixed {
            re: BigFixed::zero(bits),
            im: BigFixed::zero(bits),
        }
    }

    pub fn from_real(re: BigFixed) -> Self {
        let bits = re.bits();
        ComplexFixed {
            re,
            im: BigFixed::zero(bits),
        }
    }

    /// `e^{2 pi i t}` for rational t.
    pub fn unit_phase(t: &Rat, bits: u32) -> Self {
        let (s, c) = BigFixed::sin_cos_two_pi(t, bits);
        ComplexFixed { re: c, im: s }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexFixed {
            re: self.re.add(&other.re),
            im: self.im.add(&other.im),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexFixed {
            re: self.re.sub(&other.re),
            im: self.im.sub(&other.im),
        }
    }

    pub fn neg(&self) -> Self {
        ComplexFixed {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ComplexFixed {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn mul_real(&self, c: &BigFixed) -> Self {
        ComplexFixed {
            re: self.re.mul(c),
            im: self.im.mul(c),
        }
    }

    pub fn div_real(&self, c: &BigFixed) -> Self {
        ComplexFixed {
            re: self.re.div(c),
            im: self.im.div(c),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}
