//! Truncated multivariate Laurent expansions with exact rational
//! coefficients, in the iterated field ordering `Y_1 >> Y_2 >> ... >> Y_m`
//! (each variable dominates all later ones).
//!
//! A series lives in a `Window`: per-variable exponent floors together with
//! a cap on the total degree of a term. Inverses of linear forms expand in
//! the dominance direction -- `1/(c_p Y_p + T)` with `Y_p` the earliest
//! variable present becomes `sum_m (-T)^m / (c_p Y_p)^{m+1}` -- so every
//! retained term of such an inverse has total degree exactly -1, and the
//! per-variable floors decide how many of the infinitely many such terms are
//! kept.
//!
//! Two kinds of truncation therefore exist, and they are certified
//! differently. The `trusted` bound tracks the cap side: stored coefficients
//! of total degree at most `trusted` are exact, and multiplication degrades
//! the bound by the actual minimal degrees of the factors (the adjustment is
//! computed, never assumed). The floor side -- terms of in-range total
//! degree discarded because one exponent fell below its floor -- is not
//! tracked term-by-term; callers certify it by recomputing at an enlarged
//! window and demanding identical results.

use crate::error::{Error, Result};
use crate::Rat;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

/// The exponent region a truncated series is allowed to occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub nvars: usize,
    /// Per-variable lower bounds on exponents.
    pub floors: Vec<i64>,
    /// Upper bound on the total degree of a term.
    pub cap: i64,
}

impl Window {
    /// Floors `-cap` in every variable, total degree at most `cap`.
    pub fn symmetric(nvars: usize, cap: i64) -> Self {
        Window {
            nvars,
            floors: vec![-cap; nvars],
            cap,
        }
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        e.iter().zip(&self.floors).all(|(x, f)| x >= f)
            && e.iter().sum::<i64>() <= self.cap
    }

    fn enlarged(&self, extra: i64) -> Self {
        Window {
            nvars: self.nvars,
            floors: self.floors.clone(),
            cap: self.cap + extra,
        }
    }
}

/// A truncated Laurent expansion: finitely many exponent vectors inside a
/// window, with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct LaurentSeries {
    window: Window,
    trusted: i64,
    terms: BTreeMap<Vec<i64>, Rat>,
}

const FAR: i64 = i64::MAX / 4;

impl LaurentSeries {
    pub fn zero(window: &Window) -> Self {
        LaurentSeries {
            window: window.clone(),
            trusted: window.cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(window: &Window, c: Rat) -> Self {
        let mut s = Self::zero(window);
        s.insert_add(vec![0; window.nvars], c);
        s
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Total degree up to which stored coefficients are certified exact
    /// (cap-side truncation only; see the module notes on floors).
    pub fn trusted(&self) -> i64 {
        self.trusted
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[i64]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_add(&mut self, e: Vec<i64>, c: Rat) {
        if c.is_zero() || !self.window.contains(&e) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Smallest total degree among stored terms.
    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.window, other.window, "series windows must match");
        let mut out = self.clone();
        out.trusted = self.trusted.min(other.trusted);
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            window: self.window.clone(),
            trusted: self.trusted,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            let mut s = Self::zero(&self.window);
            s.trusted = self.trusted;
            return s;
        }
        LaurentSeries {
            window: self.window.clone(),
            trusted: self.trusted,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.window, other.window, "series windows must match");
        let ord1 = self.min_total_degree().unwrap_or(FAR);
        let ord2 = other.min_total_degree().unwrap_or(FAR);
        let trusted = self
            .trusted
            .saturating_add(ord2)
            .min(other.trusted.saturating_add(ord1))
            .min(self.window.cap);
        let mut out = Self::zero(&self.window);
        out.trusted = trusted;
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if self.window.contains(&e) {
                    out.insert_add(e, c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.window, Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Geometric-series inverse of a unit power series (no negative
    /// exponents, nonzero constant term).
    pub fn invert(&self) -> Result<Self> {
        if self.terms.keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(Error::Validation(
                "series inversion requires a power series with no negative exponents".into(),
            ));
        }
        let c0 = self.coefficient(&vec![0; self.window.nvars]);
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // S = c0 (1 + T) with T of total degree >= 1.
        let t = self
            .scale(&c0.recip())
            .sub(&Self::constant(&self.window, Rat::one()));
        let mut out = Self::zero(&self.window);
        let mut power = Self::constant(&self.window, Rat::one());
        let mut sign = Rat::one();
        loop {
            out = out.add(&power.scale(&(&sign * &c0.recip())));
            power = power.mul(&t);
            if power.is_zero() {
                break;
            }
            sign = -sign;
        }
        out.trusted = self.trusted;
        Ok(out)
    }

    /// Keep only terms inside the (smaller) target window.
    fn restrict(&self, window: &Window) -> Self {
        assert_eq!(self.window.nvars, window.nvars);
        let mut out = Self::zero(window);
        out.trusted = self.trusted.min(window.cap);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    /// The residue in the last (least dominant) variable: the coefficient
    /// series of `Y_last^{-1}`.
    pub fn residue_last_var(&self) -> Result<Self> {
        let n = self.window.nvars;
        if n == 0 {
            return Err(Error::Validation(
                "no variable left to take a residue in".into(),
            ));
        }
        let window = Window {
            nvars: n - 1,
            floors: self.window.floors[..n - 1].to_vec(),
            cap: self.window.cap + 1,
        };
        let mut out = LaurentSeries {
            window,
            trusted: self.trusted + 1,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[n - 1] == -1 {
                out.terms.insert(e[..n - 1].to_vec(), c.clone());
            }
        }
        Ok(out)
    }

    /// Iterated residue, innermost in the last variable: apply
    /// `residue_last_var` until no variables remain, then read the constant.
    pub fn iterated_residue(&self) -> Result<Rat> {
        let mut s = self.clone();
        while s.window.nvars > 0 {
            s = s.residue_last_var()?;
        }
        Ok(s.coefficient(&[]))
    }

    /// The iterated residue of `e^{<c, Y>} * self`, with the exponential
    /// kept exact: only terms with every exponent at most -1 contribute,
    /// each weighted by `prod_j c_j^{-1-e_j} / (-1-e_j)!` (with `0^0 = 1`).
    pub fn residue_against_exponential(&self, c: &[Rat]) -> Rat {
        assert_eq!(c.len(), self.window.nvars);
        let tables: Vec<Vec<Rat>> = (0..c.len())
            .map(|j| {
                let tmax = (-self.window.floors[j] - 1).max(0) as usize;
                let mut tab = Vec::with_capacity(tmax + 1);
                tab.push(Rat::one());
                for t in 1..=tmax {
                    let prev: &Rat = &tab[t - 1];
                    tab.push(prev * &c[j] / Rat::from_integer(BigInt::from(t)));
                }
                tab
            })
            .collect();
        let mut acc = Rat::zero();
        'terms: for (e, coeff) in &self.terms {
            let mut prod = coeff.clone();
            for (j, &ej) in e.iter().enumerate() {
                if ej > -1 {
                    continue 'terms;
                }
                let t = (-1 - ej) as usize;
                prod *= &tables[j][t];
                if prod.is_zero() {
                    continue 'terms;
                }
            }
            acc += prod;
        }
        acc
    }
}

/// A multiplicative building block of a residue integrand, as a function of
/// the linear form `L(Y) = sum_i c_i Y_i`.
#[derive(Clone, Debug)]
pub enum Factor {
    /// `e^{L}`.
    Exp(Vec<Rat>),
    /// `1 / (e^{L} - 1)`.
    InvExpMinusOne(Vec<Rat>),
    /// `1 / (e^{L/2} - e^{-L/2})^m = 1 / (2 sinh(L/2))^m`.
    InvTwoSinhHalfPow(Vec<Rat>, u32),
    /// `1 / L^m`.
    InvLinearPow(Vec<Rat>, u32),
    /// An explicit finite sum of monomials.
    Polynomial(Vec<(Vec<i64>, Rat)>),
}

/// The Bernoulli numbers `B_0 ..= B_up_to` (second kind, `B_1 = -1/2`),
/// from the defining recurrence
/// `B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j`.
pub fn bernoulli_numbers(up_to: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(up_to + 1);
    for m in 0..=up_to {
        if m == 0 {
            b.push(Rat::one());
            continue;
        }
        let mut acc = Rat::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            acc += bj * Rat::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn inverse_factorials(up_to: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(Rat::one());
    for k in 1..=up_to {
        let prev: &Rat = &out[k - 1];
        out.push(prev / Rat::from_integer(BigInt::from(k)));
    }
    out
}

fn poly_mul_trunc(a: &[Rat], b: &[Rat], deg: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate().take(deg + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > deg {
                break;
            }
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn poly_invert_unit(a: &[Rat], deg: usize) -> Result<Vec<Rat>> {
    if a.is_empty() || a[0].is_zero() {
        return Err(Error::DivisionByZero);
    }
    let c0 = a[0].recip();
    let mut out = vec![Rat::zero(); deg + 1];
    out[0] = c0.clone();
    for k in 1..=deg {
        let mut s = Rat::zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() {
                s += &a[j] * &out[k - j];
            }
        }
        out[k] = -(s * &c0);
    }
    Ok(out)
}

/// The linear form itself as a (degree-one) series.
fn linear_series(window: &Window, c: &[Rat]) -> LaurentSeries {
    let mut s = LaurentSeries::zero(window);
    for (i, ci) in c.iter().enumerate() {
        if !ci.is_zero() {
            let mut e = vec![0i64; window.nvars];
            e[i] = 1;
            s.insert_add(e, ci.clone());
        }
    }
    s
}

/// `1/L` in the dominance ordering: with `Y_p` the earliest variable in L,
/// `1/(c_p Y_p + T) = sum_m (-T)^m / (c_p Y_p)^{m+1}`. Every term has total
/// degree exactly -1; the floor on `Y_p` bounds m.
fn inv_linear(window: &Window, c: &[Rat]) -> Result<LaurentSeries> {
    let p = c
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Validation("cannot expand the inverse of the zero linear form".into()))?;
    let cp = c[p].clone();
    let mut tail = c.to_vec();
    for x in tail.iter_mut().take(p + 1) {
        *x = Rat::zero();
    }
    let t_series = linear_series(window, &tail);
    let mut result = LaurentSeries::zero(window);
    let mut tm = LaurentSeries::constant(window, Rat::one());
    let mmax = -window.floors[p] - 1;
    let mut cp_pow = cp.recip(); // 1 / c_p^{m+1}
    let mut m: i64 = 0;
    while m <= mmax && !tm.is_zero() {
        for (e, co) in tm.terms.iter() {
            let mut e2 = e.clone();
            e2[p] -= m + 1;
            let mut v = co * &cp_pow;
            if m % 2 == 1 {
                v = -v;
            }
            result.insert_add(e2, v);
        }
        tm = tm.mul(&t_series);
        cp_pow = cp_pow / &cp;
        m += 1;
    }
    Ok(result)
}

/// Expand `(sum_k q_k L^k) / L^m` into the window: the substitution runs in
/// a cap-enlarged window so that the high powers of L that survive division
/// by `L^m` are not lost, then the result is clipped back.
fn substitute_over_linear_power(
    window: &Window,
    c: &[Rat],
    q: &[Rat],
    m: u32,
) -> Result<LaurentSeries> {
    if c.len() != window.nvars {
        return Err(Error::Validation(format!(
            "linear form has {} coefficients for a {}-variable window",
            c.len(),
            window.nvars
        )));
    }
    let big = window.enlarged(m as i64);
    let lser = linear_series(&big, c);
    let mut sub = LaurentSeries::zero(&big);
    let mut lpow = LaurentSeries::constant(&big, Rat::one());
    for (k, qk) in q.iter().enumerate() {
        if k > 0 {
            lpow = lpow.mul(&lser);
            if lpow.is_zero() {
                break;
            }
        }
        if !qk.is_zero() {
            sub = sub.add(&lpow.scale(qk));
        }
    }
    let result = if m == 0 {
        sub
    } else {
        let inv = inv_linear(&big, c)?;
        let mut invm = inv.clone();
        for _ in 1..m {
            invm = invm.mul(&inv);
        }
        sub.mul(&invm)
    };
    Ok(result.restrict(window))
}

/// Expand one integrand factor into the window.
pub fn expand_factor(factor: &Factor, window: &Window) -> Result<LaurentSeries> {
    match factor {
        Factor::Exp(c) => {
            let deg = window.cap.max(0) as usize;
            substitute_over_linear_power(window, c, &inverse_factorials(deg), 0)
        }
        Factor::InvExpMinusOne(c) => {
            // 1/(e^L - 1) = (1/L) * sum_k B_k L^k / k!
            let deg = (window.cap + 1).max(0) as usize;
            let bern = bernoulli_numbers(deg);
            let inv_fact = inverse_factorials(deg);
            let q: Vec<Rat> = bern
                .iter()
                .zip(&inv_fact)
                .map(|(bk, f)| bk * f)
                .collect();
            substitute_over_linear_power(window, c, &q, 1)
        }
        Factor::InvTwoSinhHalfPow(c, m) => {
            // 2 sinh(L/2) = L * h(L) with h(u) = sum_t u^{2t} / (4^t (2t+1)!),
            // so the factor is h(L)^{-m} / L^m.
            let deg = (window.cap + *m as i64).max(0) as usize;
            let mut h = vec![Rat::zero(); deg + 1];
            let mut denom = BigInt::one();
            let mut t = 0usize;
            while 2 * t <= deg {
                if t > 0 {
                    denom *= BigInt::from(4 * (2 * t) * (2 * t + 1));
                }
                h[2 * t] = Rat::new(BigInt::one(), denom.clone());
                t += 1;
            }
            let hinv = poly_invert_unit(&h, deg)?;
            let mut hm = vec![Rat::zero(); deg + 1];
            hm[0] = Rat::one();
            for _ in 0..*m {
                hm = poly_mul_trunc(&hm, &hinv, deg);
            }
            substitute_over_linear_power(window, c, &hm, *m)
        }
        Factor::InvLinearPow(c, m) => {
            substitute_over_linear_power(window, c, &[Rat::one()], *m)
        }
        Factor::Polynomial(terms) => {
            let mut s = LaurentSeries::zero(window);
            for (e, coeff) in terms {
                if e.len() != window.nvars {
                    return Err(Error::Validation(format!(
                        "monomial exponent vector has length {} for a {}-variable window",
                        e.len(),
                        window.nvars
                    )));
                }
                s.insert_add(e.clone(), coeff.clone());
            }
            Ok(s)
        }
    }
}
