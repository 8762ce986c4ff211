//! The exact alcove-sum engine: section counts as finite sums over the
//! shifted level-r alcove, evaluated in cyclotomic arithmetic.
//!
//! For level k and shifted level `r = k + n`, the count is
//!
//! ```text
//! V = sum_{mu in alcove(r)}  phase(mu) * prod_s s_pair(lambda_s, mu)
//!                            / s_zero(mu)^{2g - 2 + b}
//! ```
//!
//! where `s_zero` and `s_pair` share the prefactor `1 / sqrt(n r^{n-1})`, so
//! the b pairing factors and the `2g-2+b` denominator powers combine into
//! the *integer* power `(n r^{n-1})^{g-1}` times `i^{n_plus b}` -- the
//! evaluation never needs a square-root inversion. Everything else is a
//! product of roots of unity and inverted sines, all exact.
//!
//! Engines are memoized per `(n, d, g, k, b)`, and for repeated multi-point
//! evaluations the per-alcove-point column built from the trailing weights
//! is cached, so sweeping one weight against many partners reuses the rest.

use crate::bigfixed::{bits_for_digits, BigFixed, ComplexFixed};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::root_system::{
    build_root_system, central_element, enumerate_alcove, rat, rat_int, wall_violations,
    RootSystem, Weight,
};
use crate::Rat;
use num::{BigInt, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A complete problem instance: group rank data `n`, twist degree `d`,
/// genus `g`, level `k`, and the dominant fibre weights at the marked
/// points (possibly none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub n: usize,
    pub d: i64,
    pub g: u32,
    pub k: i64,
    pub weights: Vec<Weight>,
}

impl ProblemSpec {
    pub fn new(n: usize, d: i64, g: u32, k: i64, weights: Vec<Weight>) -> Result<Self> {
        let spec = ProblemSpec { n, d, g, k, weights };
        spec.validate()?;
        Ok(spec)
    }

    /// The shifted level `r = k + n`.
    pub fn r(&self) -> i64 {
        self.k + self.n as i64
    }

    /// The number of marked points.
    pub fn b(&self) -> usize {
        self.weights.len()
    }

    /// Check every precondition, with messages naming the violated rule.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        // validates n >= 2, 1 <= d <= n-1, and coprimality
        central_element(n, self.d)?;
        if self.k < 1 {
            return Err(Error::Validation(format!(
                "the level k must be positive, got k = {}",
                self.k
            )));
        }
        if self.k % n as i64 != 0 {
            return Err(Error::Validation(format!(
                "the level k = {} must be divisible by n = {n}",
                self.k
            )));
        }
        let b = self.weights.len();
        if b == 0 && self.g < 2 {
            return Err(Error::Validation(format!(
                "a closed surface (no marked points) needs genus at least 2, got g = {}",
                self.g
            )));
        }
        if self.g < 1 {
            return Err(Error::Validation(format!(
                "the genus must be at least 1, got g = {}",
                self.g
            )));
        }
        for (s, lam) in self.weights.iter().enumerate() {
            if lam.fund.len() != n - 1 {
                return Err(Error::Validation(format!(
                    "weight #{s} has {} coordinates, expected {}",
                    lam.fund.len(),
                    n - 1
                )));
            }
            if !lam.is_dominant() {
                return Err(Error::Validation(format!(
                    "weight #{s} = {:?} must be dominant (all coordinates nonnegative)",
                    lam.fund
                )));
            }
            if lam.pair_highest_root() > self.k {
                return Err(Error::Validation(format!(
                    "weight #{s} = {:?} has level {} exceeding the level k = {}",
                    lam.fund,
                    lam.pair_highest_root(),
                    self.k
                )));
            }
        }
        let rs = build_root_system(n)?;
        let scale = rat(1, self.k);
        let scaled: Vec<_> = self
            .weights
            .iter()
            .map(|lam| lam.to_tvector().scale(&scale))
            .collect();
        let violations = wall_violations(&rs, &scaled, Some(1));
        if let Some(v) = violations.first() {
            return Err(Error::Validation(format!(
                "the marked-point weights leave the open chamber at scale 1/k: {v}"
            )));
        }
        Ok(())
    }
}

/// The central phase attached to an alcove point: `e^{-2 pi i <mu - rho, c>}`
/// with c the central element for (n, d). An n-th root of unity up to sign.
pub fn central_phase(n: usize, d: i64, mu: &Weight) -> Result<Cyclotomic> {
    let c = central_element(n, d)?;
    if mu.fund.len() != n - 1 {
        return Err(Error::Validation(format!(
            "alcove point has {} coordinates, expected {}",
            mu.fund.len(),
            n - 1
        )));
    }
    let mut q = Rat::zero();
    for (j, m) in mu.fund.iter().enumerate() {
        if *m != 1 {
            q += c.pair_fundamental(j + 1) * rat_int(m - 1);
        }
    }
    Ok(Cyclotomic::e2pi(&-q))
}

fn check_alcove_point(n: usize, r: i64, mu: &Weight) -> Result<()> {
    if mu.fund.len() != n - 1 {
        return Err(Error::Validation(format!(
            "alcove point has {} coordinates, expected {}",
            mu.fund.len(),
            n - 1
        )));
    }
    if !mu.is_regular_dominant() || mu.pair_highest_root() > r - 1 {
        return Err(Error::Validation(format!(
            "alcove point {:?} is not strictly inside the level-{r} alcove \
             (coordinates must be >= 1 with sum <= {})",
            mu.fund,
            r - 1
        )));
    }
    Ok(())
}

/// `1 / sqrt(n r^{n-1})` as an exact cyclotomic value.
fn inv_volume_root(n: usize, r: i64) -> Cyclotomic {
    let m = n as u64 * (r as u64).pow(n as u32 - 1);
    Cyclotomic::sqrt_int(m).scale(&rat(1, m as i64))
}

/// The diagonal statistic of an alcove point:
/// `s_zero(mu) = prod_{gamma > 0} 2 sin(pi <gamma, mu> / r) / sqrt(n r^{n-1})`,
/// strictly positive on the open alcove.
pub fn s_zero(n: usize, r: i64, mu: &Weight) -> Result<Cyclotomic> {
    let rs = build_root_system(n)?;
    check_alcove_point(n, r, mu)?;
    let mut prod = Cyclotomic::one(1);
    for gamma in &rs.positive_roots {
        prod = prod.mul(&Cyclotomic::two_sin(gamma.pair_weight(mu), r)?);
    }
    Ok(prod.mul(&inv_volume_root(n, r)))
}

/// The pairing statistic
/// `s_pair(lambda, mu) = i^{n_plus} / sqrt(n r^{n-1}) *
///  sum_{v in W} (-1)^v e^{-2 pi i <v(lambda + rho), mu> / r}`,
/// which reduces to `s_zero(mu)` at `lambda = 0`.
pub fn s_pair(n: usize, r: i64, lambda: &Weight, mu: &Weight) -> Result<Cyclotomic> {
    let rs = build_root_system(n)?;
    check_alcove_point(n, r, mu)?;
    if lambda.fund.len() != n - 1 {
        return Err(Error::Validation(format!(
            "weight has {} coordinates, expected {}",
            lambda.fund.len(),
            n - 1
        )));
    }
    if !lambda.is_dominant() || lambda.pair_highest_root() > r - n as i64 {
        return Err(Error::Validation(format!(
            "weight {:?} must be dominant with level at most r - n = {}",
            lambda.fund,
            r - n as i64
        )));
    }
    let tsum = weyl_phase_sum(&rs, r, lambda, mu);
    let pref = Cyclotomic::root_of_unity(4, rs.n_plus as i64).mul(&inv_volume_root(n, r));
    Ok(tsum.mul(&pref))
}

/// `sum_{v in W} (-1)^v e^{-2 pi i <v(lambda + rho), mu> / r}`.
fn weyl_phase_sum(rs: &RootSystem, r: i64, lambda: &Weight, mu: &Weight) -> Cyclotomic {
    let shifted = lambda.add(&rs.rho).to_tvector();
    let rr = rat_int(r);
    let mut acc = Cyclotomic::zero(1);
    for w in rs.weyl_group() {
        let coords = w.apply(&shifted).simple_coords();
        let mut pairing = Rat::zero();
        for (j, m) in mu.fund.iter().enumerate() {
            if *m != 0 {
                pairing += &coords[j] * rat_int(*m);
            }
        }
        let phase = Cyclotomic::e2pi(&(-pairing / &rr));
        acc = if w.sign > 0 {
            acc.add(&phase)
        } else {
            acc.sub(&phase)
        };
    }
    acc
}

/// One fully-preprocessed alcove-sum engine for fixed `(n, d, g, k, b)`.
struct SumEngine {
    rs: RootSystem,
    r: i64,
    alcove: Vec<Weight>,
    /// `phase(mu) * i^{n_plus b} * (n r^{n-1})^{g-1} * prod_gamma
    /// invsin(<gamma, mu>)^{2g-2+b}` for each alcove point.
    base_column: Arc<Vec<Cyclotomic>>,
    /// Columns extended by trailing weight lists (sorted), memoized.
    columns: Mutex<HashMap<Vec<Weight>, Arc<Vec<Cyclotomic>>>>,
}

impl SumEngine {
    fn build(n: usize, d: i64, g: u32, k: i64, b: usize) -> Result<SumEngine> {
        let rs = build_root_system(n)?;
        let r = k + n as i64;
        let alcove = enumerate_alcove(n, r)?;
        let c = central_element(n, d)?;
        let m_power = 2 * g - 2 + b as u32;

        // inverted sine powers, memoized over the pairing value
        let mut inv_sin_pow: Vec<Option<Cyclotomic>> = vec![None; r as usize];
        for m in 1..r {
            inv_sin_pow[m as usize] =
                Some(Cyclotomic::two_sin(m, r)?.invert()?.pow(m_power));
        }

        let volume = Rat::from_integer(
            BigInt::from(n as i64) * BigInt::from(r).pow(n as u32 - 1),
        )
        .pow((g - 1) as i32);
        let pref =
            Cyclotomic::root_of_unity(4, (rs.n_plus * b) as i64).scale(&volume);

        let cfund: Vec<Rat> = (1..n).map(|j| c.pair_fundamental(j)).collect();
        let mut base = Vec::with_capacity(alcove.len());
        for mu in &alcove {
            let mut q = Rat::zero();
            for (j, m) in mu.fund.iter().enumerate() {
                if *m != 1 {
                    q += &cfund[j] * rat_int(m - 1);
                }
            }
            let mut term = Cyclotomic::e2pi(&-q).mul(&pref);
            for gamma in &rs.positive_roots {
                let p = gamma.pair_weight(mu) as usize;
                term = term.mul(inv_sin_pow[p].as_ref().expect("alcove pairing in range"));
            }
            base.push(term);
        }
        Ok(SumEngine {
            rs,
            r,
            alcove,
            base_column: Arc::new(base),
            columns: Mutex::new(HashMap::new()),
        })
    }

    /// The Weyl phase sums of one weight against every alcove point.
    fn phase_row(&self, lambda: &Weight) -> Vec<Cyclotomic> {
        self.alcove
            .iter()
            .map(|mu| weyl_phase_sum(&self.rs, self.r, lambda, mu))
            .collect()
    }

    /// The base column multiplied by the phase rows of a (sorted) list of
    /// trailing weights, memoized per list.
    fn column(&self, tail: &[Weight]) -> Arc<Vec<Cyclotomic>> {
        if tail.is_empty() {
            return self.base_column.clone();
        }
        if let Some(col) = self.columns.lock().unwrap().get(tail) {
            return col.clone();
        }
        let inner = self.column(&tail[1..]);
        let row = self.phase_row(&tail[0]);
        let col: Arc<Vec<Cyclotomic>> = Arc::new(
            row.iter()
                .zip(inner.iter())
                .map(|(a, b)| a.mul(b))
                .collect(),
        );
        self.columns
            .lock()
            .unwrap()
            .insert(tail.to_vec(), col.clone());
        col
    }

    fn eval(&self, weights: &[Weight]) -> Cyclotomic {
        let mut sorted = weights.to_vec();
        sorted.sort();
        let (head, tail) = match sorted.split_first() {
            None => {
                return self
                    .base_column
                    .iter()
                    .fold(Cyclotomic::zero(1), |acc, t| acc.add(t));
            }
            Some((h, t)) => (h, t),
        };
        let col = self.column(tail);
        let row = self.phase_row(head);
        row.iter()
            .zip(col.iter())
            .fold(Cyclotomic::zero(1), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

type EngineKey = (usize, i64, u32, i64, usize);

fn engine(n: usize, d: i64, g: u32, k: i64, b: usize) -> Result<Arc<SumEngine>> {
    static CACHE: OnceLock<Mutex<HashMap<EngineKey, Arc<SumEngine>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, d, g, k, b);
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let built = Arc::new(SumEngine::build(n, d, g, k, b)?);
    let mut guard = cache.lock().unwrap();
    Ok(guard.entry(key).or_insert(built).clone())
}

/// The exact alcove-sum value as a cyclotomic number, before integer
/// extraction.  Exposed so callers can witness the integrality collapse
/// themselves; `verlinde_number` is this plus the integer check.
pub fn alcove_sum_exact(spec: &ProblemSpec) -> Result<Cyclotomic> {
    spec.validate()?;
    let e = engine(spec.n, spec.d, spec.g, spec.k, spec.b())?;
    Ok(e.eval(&spec.weights))
}

/// The section count by the exact alcove sum. The cyclotomic total must
/// collapse to an integer; anything else is reported as a failure.
pub fn verlinde_number(spec: &ProblemSpec) -> Result<BigInt> {
    alcove_sum_exact(spec)?.expect_integer("the alcove-sum section count")
}

/// Convenience wrapper: one marked point.
pub fn parabolic_one_point(
    n: usize,
    d: i64,
    g: u32,
    k: i64,
    lambda: Weight,
) -> Result<BigInt> {
    verlinde_number(&ProblemSpec::new(n, d, g, k, vec![lambda])?)
}

/// Convenience wrapper: any number of marked points.
pub fn parabolic_multi_point(
    n: usize,
    d: i64,
    g: u32,
    k: i64,
    lambdas: Vec<Weight>,
) -> Result<BigInt> {
    verlinde_number(&ProblemSpec::new(n, d, g, k, lambdas)?)
}

/// The same alcove sum evaluated in fixed-point complex arithmetic with the
/// requested decimal precision -- an independent numerical backend used to
/// cross-check the exact engines.
pub fn alcove_sum_float(spec: &ProblemSpec, digits: u32) -> Result<ComplexFixed> {
    spec.validate()?;
    let bits = bits_for_digits(digits);
    let n = spec.n;
    let r = spec.r();
    let b = spec.b();
    let rs = build_root_system(n)?;
    let alcove = enumerate_alcove(n, r)?;
    let weyl = rs.weyl_group();
    let c = central_element(n, spec.d)?;
    let m_power = 2 * spec.g - 2 + b as u32;

    // 2 sin(pi m / r) raised to the denominator power, for m = 1..r-1
    let sin_pow: Vec<BigFixed> = (1..r)
        .map(|m| {
            let (s, _) = BigFixed::sin_cos_two_pi(&rat(m, 2 * r), bits);
            s.mul_int(2).pow(m_power)
        })
        .collect();

    let orbits: Vec<Vec<(i8, Vec<Rat>)>> = spec
        .weights
        .iter()
        .map(|lam| {
            let shifted = lam.add(&rs.rho).to_tvector();
            weyl.iter()
                .map(|w| (w.sign, w.apply(&shifted).simple_coords()))
                .collect()
        })
        .collect();

    let cfund: Vec<Rat> = (1..n).map(|j| c.pair_fundamental(j)).collect();
    let rr = rat_int(r);
    let mut total = ComplexFixed::zero(bits);
    for mu in &alcove {
        let mut q = Rat::zero();
        for (j, m) in mu.fund.iter().enumerate() {
            if *m != 1 {
                q += &cfund[j] * rat_int(m - 1);
            }
        }
        let mut term = ComplexFixed::unit_phase(&-q, bits);
        for orbit in &orbits {
            let mut ts = ComplexFixed::zero(bits);
            for (sign, coords) in orbit {
                let mut pairing = Rat::zero();
                for (j, m) in mu.fund.iter().enumerate() {
                    if *m != 0 {
                        pairing += &coords[j] * rat_int(*m);
                    }
                }
                let phase = ComplexFixed::unit_phase(&(-pairing / &rr), bits);
                ts = if *sign > 0 { ts.add(&phase) } else { ts.sub(&phase) };
            }
            term = term.mul(&ts);
        }
        let mut den = BigFixed::one(bits);
        for gamma in &rs.positive_roots {
            den = den.mul(&sin_pow[(gamma.pair_weight(mu) - 1) as usize]);
        }
        total = total.add(&term.div_real(&den));
    }

    let volume = Rat::from_integer(
        BigInt::from(n as i64) * BigInt::from(r).pow(n as u32 - 1),
    )
    .pow((spec.g - 1) as i32);
    let phase = ComplexFixed::unit_phase(&rat((rs.n_plus * b) as i64, 4), bits);
    Ok(total
        .mul_real(&BigFixed::from_rat(&volume, bits))
        .mul(&phase))
}
