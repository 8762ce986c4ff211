//! Lie-combinatorial data for SU(n): roots, weights, the Weyl group, alcove
//! enumeration, the central element, fractional-part reduction, and the
//! chamber-validity walls.
//!
//! Internal canonical coordinates are *diagonal*: a Cartan-algebra point is
//! stored as n exact rationals summing to zero. In these coordinates the
//! Weyl group acts by permutation, the invariant inner product is the dot
//! product, and the two derived coordinate systems are exact partial-sum
//! maps:
//!
//! * the j-th *simple-root coordinate* of x equals its pairing with the j-th
//!   fundamental weight, and is the partial sum `t_1 + ... + t_j`;
//! * the pairing with the j-th simple root is `t_j - t_{j+1}`.

use crate::error::{Error, Result};
use crate::Rat;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational from an integer pair.
pub(crate) fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact rational from an integer.
pub(crate) fn rat_int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

/// A positive root of SU(n), stored as the inclusive 1-based interval
/// `[lo, hi]` of simple roots it sums; in diagonal coordinates it is
/// `e_lo - e_{hi+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub lo: usize,
    pub hi: usize,
}

impl Root {
    /// Pairing with a weight in fundamental coordinates: the sum of the
    /// fundamental coordinates over the interval.
    pub fn pair_weight(&self, w: &Weight) -> i64 {
        w.fund[self.lo - 1..=self.hi - 1].iter().sum()
    }

    /// The coefficients of this root as a linear form in the variables
    /// `Y_1..Y_{n-1}`: one on the interval, zero elsewhere.
    pub fn linear_form(&self, nvars: usize) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); nvars];
        for j in self.lo..=self.hi {
            c[j - 1] = Rat::one();
        }
        c
    }
}

/// A point of the Cartan algebra: n exact diagonal entries summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TVector {
    diag: Vec<Rat>,
}

impl TVector {
    /// The zero vector for SU(n).
    pub fn zero(n: usize) -> Self {
        TVector {
            diag: vec![Rat::zero(); n],
        }
    }

    /// Build from diagonal coordinates; they must sum to zero exactly.
    pub fn from_diag(diag: Vec<Rat>) -> Result<Self> {
        if diag.len() < 2 {
            return Err(Error::Validation(
                "a Cartan-algebra vector needs at least 2 diagonal coordinates".into(),
            ));
        }
        let sum: Rat = diag.iter().cloned().sum();
        if !sum.is_zero() {
            return Err(Error::Validation(format!(
                "diagonal coordinates must sum to 0, got {sum}"
            )));
        }
        Ok(TVector { diag })
    }

    /// Build from simple-root coordinates `s_1..s_{n-1}` (the partial sums):
    /// `t_i = s_i - s_{i-1}` with `s_0 = s_n = 0`.
    pub fn from_simple_coords(s: &[Rat]) -> Self {
        let n = s.len() + 1;
        let mut diag = Vec::with_capacity(n);
        let mut prev = Rat::zero();
        for si in s {
            diag.push(si - &prev);
            prev = si.clone();
        }
        diag.push(-prev);
        TVector { diag }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Rat] {
        &self.diag
    }

    /// Simple-root coordinates: the partial sums `t_1 + ... + t_j`,
    /// `j = 1..n-1`. These equal the pairings with the fundamental weights.
    pub fn simple_coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.diag.len() - 1);
        let mut acc = Rat::zero();
        for t in &self.diag[..self.diag.len() - 1] {
            acc += t;
            out.push(acc.clone());
        }
        out
    }

    /// Invariant inner product: the dot product of diagonal coordinates.
    pub fn inner(&self, other: &TVector) -> Rat {
        self.diag
            .iter()
            .zip(&other.diag)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Pairing with the j-th fundamental weight (1-based): the j-th partial
    /// sum of the diagonal coordinates.
    pub fn pair_fundamental(&self, j: usize) -> Rat {
        self.diag[..j].iter().cloned().sum()
    }

    /// Pairing with a root: `t_lo - t_{hi+1}`.
    pub fn pair_root(&self, root: Root) -> Rat {
        &self.diag[root.lo - 1] - &self.diag[root.hi]
    }

    /// Pairing with an integral weight given in fundamental coordinates:
    /// `sum_j m_j * (j-th partial sum)`.
    pub fn pair_weight(&self, w: &Weight) -> Rat {
        let mut acc = Rat::zero();
        let mut partial = Rat::zero();
        for (j, t) in self.diag[..self.diag.len() - 1].iter().enumerate() {
            partial += t;
            if w.fund[j] != 0 {
                acc += &partial * rat_int(w.fund[j]);
            }
        }
        acc
    }

    /// Diagonal coordinates weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.diag.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn add(&self, other: &TVector) -> TVector {
        TVector {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TVector {
        TVector {
            diag: self.diag.iter().map(|a| a * c).collect(),
        }
    }
}

/// An integral weight in fundamental-weight coordinates `(m_1..m_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub fund: Vec<i64>,
}

impl Weight {
    pub fn new(fund: Vec<i64>) -> Self {
        Weight { fund }
    }

    /// The zero weight of SU(n).
    pub fn zero(n: usize) -> Self {
        Weight {
            fund: vec![0; n - 1],
        }
    }

    /// Half the sum of the positive roots: all fundamental coordinates 1.
    pub fn rho(n: usize) -> Self {
        Weight {
            fund: vec![1; n - 1],
        }
    }

    pub fn n(&self) -> usize {
        self.fund.len() + 1
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|&m| m >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.fund.iter().all(|&m| m >= 1)
    }

    /// Pairing with the highest coroot: the sum of fundamental coordinates.
    pub fn pair_highest_root(&self) -> i64 {
        self.fund.iter().sum()
    }

    /// Label of the weight's coset modulo the root lattice, as an element
    /// of Z/n: `sum_j j * m_j mod n`.  Zero means the weight is an integer
    /// combination of roots.
    pub fn root_lattice_class(&self) -> i64 {
        let n = self.n() as i64;
        self.fund
            .iter()
            .enumerate()
            .map(|(j, m)| (j as i64 + 1) * m)
            .sum::<i64>()
            .rem_euclid(n)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            fund: self
                .fund
                .iter()
                .zip(&other.fund)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Realize in diagonal coordinates:
    /// `t_i = sum_{j >= i} m_j - (sum_j j*m_j)/n`.
    pub fn to_tvector(&self) -> TVector {
        let n = self.n();
        let total: i64 = self
            .fund
            .iter()
            .enumerate()
            .map(|(j, m)| (j as i64 + 1) * m)
            .sum();
        let shift = rat(total, n as i64);
        let mut tail: i64 = self.fund.iter().sum();
        let mut diag = Vec::with_capacity(n);
        for j in 0..n {
            if j > 0 {
                tail -= self.fund[j - 1];
            }
            diag.push(rat_int(tail) - &shift);
        }
        TVector { diag }
    }
}

/// One Weyl-group element: a permutation of the n diagonal coordinates.
/// `apply` sends coordinate slot i of the result to the source slot
/// `perm[i]`; `sign` is the permutation parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub sign: i8,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            sign: 1,
        }
    }

    pub fn apply(&self, x: &TVector) -> TVector {
        TVector {
            diag: self.perm.iter().map(|&src| x.diag[src].clone()).collect(),
        }
    }

    /// True when this element fixes the last diagonal coordinate.
    pub fn fixes_last(&self) -> bool {
        *self.perm.last().unwrap() == self.perm.len() - 1
    }
}

fn parity(perm: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out.sort();
    out
}

/// All static data of the SU(n) root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub n: usize,
    /// All positive roots as intervals, ordered lexicographically.
    pub positive_roots: Vec<Root>,
    /// Number of positive roots, n(n-1)/2.
    pub n_plus: usize,
    /// Half the sum of positive roots: all fundamental coordinates 1.
    pub rho: Weight,
    /// The highest root: the full interval `[1, n-1]`.
    pub gamma_max: Root,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Validation(format!(
                "the rank parameter n must be at least 2, got {n}"
            )));
        }
        let mut positive_roots = Vec::new();
        for lo in 1..n {
            for hi in lo..n {
                positive_roots.push(Root { lo, hi });
            }
        }
        positive_roots.sort_by_key(|r| (r.lo, r.hi));
        Ok(RootSystem {
            n,
            n_plus: n * (n - 1) / 2,
            rho: Weight::rho(n),
            gamma_max: Root { lo: 1, hi: n - 1 },
            positive_roots,
        })
    }

    /// The j-th fundamental weight (1-based) in diagonal coordinates:
    /// `1 - j/n` on the first j entries, `-j/n` on the rest.
    pub fn fundamental_weight(&self, j: usize) -> TVector {
        let n = self.n as i64;
        let jj = j as i64;
        let mut diag = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            diag.push(if i <= j {
                rat_int(1) - rat(jj, n)
            } else {
                -rat(jj, n)
            });
        }
        TVector { diag }
    }

    /// The full Weyl group: all n! coordinate permutations with parity.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        permutations_of(self.n)
            .into_iter()
            .map(|perm| {
                let sign = parity(&perm);
                WeylElement { perm, sign }
            })
            .collect()
    }

    /// The subgroup permuting only the first n-1 coordinates.
    pub fn weyl_subgroup_fixing_last(&self) -> Vec<WeylElement> {
        permutations_of(self.n - 1)
            .into_iter()
            .map(|mut perm| {
                perm.push(self.n - 1);
                let sign = parity(&perm);
                WeylElement { perm, sign }
            })
            .collect()
    }
}

/// Build the full static root-system record for SU(n).
pub fn build_root_system(n: usize) -> Result<RootSystem> {
    RootSystem::new(n)
}

/// All regular dominant weights of level < r: `m_j >= 1`,
/// `sum m_j <= r - 1`, in lexicographic order. Requires `r >= 2`; for
/// `r < n` the list is empty.
pub fn enumerate_alcove(n: usize, r: i64) -> Result<Vec<Weight>> {
    if n < 2 {
        return Err(Error::Validation(format!(
            "the rank parameter n must be at least 2, got {n}"
        )));
    }
    if r < 2 {
        return Err(Error::Validation(format!(
            "the shifted level r must be at least 2, got {r}"
        )));
    }
    let l = n - 1;
    let mut out = Vec::new();
    let mut cur = vec![0i64; l];
    fn rec(cur: &mut Vec<i64>, idx: usize, budget: i64, out: &mut Vec<Weight>) {
        let l = cur.len();
        if idx == l {
            out.push(Weight { fund: cur.clone() });
            return;
        }
        let remaining_min = (l - idx - 1) as i64; // each later coordinate needs >= 1
        let mut m = 1i64;
        while m + remaining_min <= budget {
            cur[idx] = m;
            rec(cur, idx + 1, budget - m, out);
            m += 1;
        }
    }
    rec(&mut cur, 0, r - 1, &mut out);
    Ok(out)
}

/// The fractional-part reduction `[[x]]`: replace each simple-root
/// coordinate by its fractional part in `[0, 1)`. Idempotent; the output
/// differs from the input by an integer-lattice vector.
pub fn reduce_to_fundamental_domain(x: &TVector) -> TVector {
    let frac: Vec<Rat> = x
        .simple_coords()
        .into_iter()
        .map(|s| {
            let f = s.floor();
            s - f
        })
        .collect();
    TVector::from_simple_coords(&frac)
}

/// The logarithm of the central twist `exp(2 pi i d/n) * Id`, placed in the
/// closed fundamental alcove: diagonal coordinates `d/n` (first n-d entries)
/// and `d/n - 1` (last d entries). Requires `1 <= d <= n-1` and
/// `gcd(n, d) = 1`.
pub fn central_element(n: usize, d: i64) -> Result<TVector> {
    if n < 2 {
        return Err(Error::Validation(format!(
            "the rank parameter n must be at least 2, got {n}"
        )));
    }
    if d < 1 || d >= n as i64 {
        return Err(Error::Validation(format!(
            "the twist degree d must satisfy 1 <= d <= n-1, got d = {d} for n = {n}"
        )));
    }
    if num::integer::gcd(n as i64, d) != 1 {
        return Err(Error::Validation(format!(
            "the twist degree d = {d} is not coprime to n = {n}"
        )));
    }
    let mut diag = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        if i <= n as i64 - d {
            diag.push(rat(d, n as i64));
        } else {
            diag.push(rat(d, n as i64) - rat_int(1));
        }
    }
    Ok(TVector { diag })
}

/// Chamber validity of a list of dominant fibre weights (as Cartan-algebra
/// vectors): true iff for every choice `(w_1..w_b)` of Weyl elements the
/// vector `sum_s w_s(L_s)` has all fundamental-weight pairings of absolute
/// value strictly below 1. For one weight this reduces to the single-point
/// condition (all fundamental pairings of the dominant weight < 1); the zero
/// weight is always accepted.
pub fn chamber_valid(n: usize, weights: &[TVector]) -> Result<bool> {
    let rs = RootSystem::new(n)?;
    for (s, w) in weights.iter().enumerate() {
        if w.n() != n {
            return Err(Error::Validation(format!(
                "weight #{s} has {} coordinates, expected {n}",
                w.n()
            )));
        }
        if !w.is_dominant() {
            return Err(Error::Validation(format!(
                "weight #{s} is not dominant (diagonal coordinates must be weakly decreasing)"
            )));
        }
    }
    Ok(wall_violations(&rs, weights, Some(1)).is_empty())
}

/// Descriptions of the violated walls (empty when the configuration is
/// chamber-valid). `limit` caps the number of reported violations.
pub(crate) fn wall_violations(
    rs: &RootSystem,
    weights: &[TVector],
    limit: Option<usize>,
) -> Vec<String> {
    let b = weights.len();
    let mut out = Vec::new();
    if b == 0 {
        return out;
    }
    let weyl = rs.weyl_group();
    let mut idx = vec![0usize; b];
    loop {
        let mut total = TVector::zero(rs.n);
        for s in 0..b {
            total = total.add(&weyl[idx[s]].apply(&weights[s]));
        }
        for j in 1..rs.n {
            let p = total.pair_fundamental(j);
            if p.abs() >= rat_int(1) {
                out.push(format!(
                    "wall reached: |pairing with fundamental weight {j}| = {} >= 1 \
                     for Weyl choices {:?}",
                    p.abs(),
                    idx
                ));
                if let Some(cap) = limit {
                    if out.len() >= cap {
                        return out;
                    }
                }
            }
        }
        // odometer over W^b
        let mut s = 0;
        loop {
            if s == b {
                return out;
            }
            idx[s] += 1;
            if idx[s] < weyl.len() {
                break;
            }
            idx[s] = 0;
            s += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_one_static_data() {
        let rs = build_root_system(2).unwrap();
        assert_eq!(rs.positive_roots, vec![Root { lo: 1, hi: 1 }]);
        assert_eq!(rs.rho.fund, vec![1]);
        assert_eq!(rs.gamma_max, Root { lo: 1, hi: 1 });
        assert_eq!(rs.n_plus, 1);
    }

    #[test]
    fn rank_two_static_data() {
        let rs = build_root_system(3).unwrap();
        let intervals: Vec<(usize, usize)> =
            rs.positive_roots.iter().map(|r| (r.lo, r.hi)).collect();
        assert_eq!(intervals, vec![(1, 1), (1, 2), (2, 2)]);
        assert_eq!(rs.n_plus, 3);
    }

    #[test]
    fn number_of_positive_roots() {
        assert_eq!(build_root_system(4).unwrap().n_plus, 6);
        assert!(build_root_system(1).is_err());
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for n in 2..=5 {
            let rs = build_root_system(n).unwrap();
            let mut sum = TVector::zero(n);
            for root in &rs.positive_roots {
                let mut diag = vec![Rat::zero(); n];
                diag[root.lo - 1] = rat_int(1);
                diag[root.hi] = rat_int(-1);
                sum = sum.add(&TVector::from_diag(diag).unwrap());
            }
            assert_eq!(sum.scale(&rat(1, 2)), rs.rho.to_tvector());
        }
    }

    #[test]
    fn alcove_enumeration_examples() {
        let a = enumerate_alcove(2, 4).unwrap();
        assert_eq!(
            a,
            vec![
                Weight::new(vec![1]),
                Weight::new(vec![2]),
                Weight::new(vec![3])
            ]
        );
        assert_eq!(enumerate_alcove(2, 2).unwrap(), vec![Weight::new(vec![1])]);
        assert_eq!(enumerate_alcove(3, 6).unwrap().len(), 10);
        assert!(enumerate_alcove(2, 1).is_err());
    }

    #[test]
    fn alcove_size_rank_one() {
        for r in 2..=12 {
            assert_eq!(enumerate_alcove(2, r).unwrap().len(), (r - 1) as usize);
        }
    }

    #[test]
    fn alcove_is_lexicographically_sorted() {
        let a = enumerate_alcove(4, 9).unwrap();
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
        assert!(a.iter().all(|w| w.is_regular_dominant()));
        assert!(a.iter().all(|w| w.pair_highest_root() <= 8));
    }

    #[test]
    fn reduction_examples() {
        let x = TVector::from_simple_coords(&[rat(3, 2), rat(-1, 4)]);
        let red = reduce_to_fundamental_domain(&x);
        assert_eq!(red.simple_coords(), vec![rat(1, 2), rat(3, 4)]);

        let zero = TVector::zero(3);
        assert_eq!(reduce_to_fundamental_domain(&zero), zero);

        // Permute diag(1/2, -1/3, -1/6) by swapping the first two
        // coordinates, then reduce.
        let x = TVector::from_diag(vec![rat(-1, 3), rat(1, 2), rat(-1, 6)]).unwrap();
        let red = reduce_to_fundamental_domain(&x);
        assert_eq!(red.simple_coords(), vec![rat(2, 3), rat(1, 6)]);
    }

    #[test]
    fn reduction_idempotent_and_integral_difference() {
        let x = TVector::from_simple_coords(&[rat(-7, 3), rat(22, 5), rat(1, 2)]);
        let r1 = reduce_to_fundamental_domain(&x);
        let r2 = reduce_to_fundamental_domain(&r1);
        assert_eq!(r1, r2);
        for (a, b) in x.simple_coords().iter().zip(r1.simple_coords()) {
            assert!((a - b).is_integer());
        }
        for s in r1.simple_coords() {
            assert!(s >= Rat::zero() && s < rat_int(1));
        }
    }

    #[test]
    fn central_element_examples() {
        let c = central_element(2, 1).unwrap();
        assert_eq!(c.diag(), &[rat(1, 2), rat(-1, 2)]);
        assert_eq!(c.simple_coords(), vec![rat(1, 2)]);

        let c = central_element(3, 1).unwrap();
        assert_eq!(c.diag(), &[rat(1, 3), rat(1, 3), rat(-2, 3)]);
        assert_eq!(c.simple_coords(), vec![rat(1, 3), rat(2, 3)]);

        let c = central_element(3, 2).unwrap();
        assert_eq!(c.diag(), &[rat(2, 3), rat(-1, 3), rat(-1, 3)]);
        assert_eq!(c.simple_coords(), vec![rat(2, 3), rat(1, 3)]);

        assert!(central_element(4, 2).is_err());
        assert!(central_element(3, 0).is_err());
    }

    #[test]
    fn central_element_invariants() {
        for (n, d) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 3)] {
            let c = central_element(n, d).unwrap();
            // n * (simple-root coordinates) are integers
            for s in c.simple_coords() {
                assert!((s * rat_int(n as i64)).is_integer());
            }
            // <2 rho, c> = d(n-d)
            let rho = Weight::rho(n).to_tvector();
            assert_eq!(rho.inner(&c) * rat_int(2), rat_int(d * (n as i64 - d)));
            // closed-alcove membership: dominant, t_1 - t_n <= 1
            assert!(c.is_dominant());
            assert!(c.diag()[0].clone() - c.diag()[n - 1].clone() <= rat_int(1));
        }
    }

    #[test]
    fn chamber_examples() {
        // n=2: one fundamental weight; L with pairing 1/4 is inside.
        let l = TVector::from_simple_coords(&[rat(1, 4)]);
        assert!(chamber_valid(2, &[l]).unwrap());
        let l = TVector::from_simple_coords(&[rat(3, 2)]);
        assert!(!chamber_valid(2, &[l]).unwrap());
        assert!(chamber_valid(2, &[TVector::zero(2)]).unwrap());
        assert!(chamber_valid(3, &[]).unwrap());

        // exact wall: pairing 1 must be rejected
        let l = TVector::from_simple_coords(&[rat(1, 1)]);
        assert!(!chamber_valid(2, &[l]).unwrap());

        // two points can jointly cross a wall even when each is inside
        let l1 = TVector::from_simple_coords(&[rat(1, 2)]);
        let l2 = TVector::from_simple_coords(&[rat(1, 2)]);
        assert!(!chamber_valid(2, &[l1, l2]).unwrap());
        let l1 = TVector::from_simple_coords(&[rat(1, 2)]);
        let l2 = TVector::from_simple_coords(&[rat(1, 4)]);
        assert!(chamber_valid(2, &[l1, l2]).unwrap());

        // non-dominant input is a validation error
        let bad = TVector::from_simple_coords(&[rat(-1, 4)]);
        assert!(chamber_valid(2, &[bad]).is_err());
    }

    #[test]
    fn weyl_group_sizes_and_last_fixing() {
        let rs = build_root_system(4).unwrap();
        assert_eq!(rs.weyl_group().len(), 24);
        let sub = rs.weyl_subgroup_fixing_last();
        assert_eq!(sub.len(), 6);
        assert!(sub.iter().all(|w| w.fixes_last()));
        let x = TVector::from_simple_coords(&[rat(1, 2), rat(1, 3), rat(1, 5)]);
        for w in &sub {
            assert_eq!(w.apply(&x).diag()[3], x.diag()[3]);
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_simple_roots() {
        let rs = build_root_system(4).unwrap();
        for j in 1..4 {
            let wj = rs.fundamental_weight(j);
            for i in 1..4 {
                let alpha = Root { lo: i, hi: i };
                let expect = if i == j { rat_int(1) } else { rat_int(0) };
                assert_eq!(wj.pair_root(alpha), expect);
            }
            // consistency with the Weight realization
            let mut fund = vec![0i64; 3];
            fund[j - 1] = 1;
            assert_eq!(Weight::new(fund).to_tvector(), wj);
        }
    }

    #[test]
    fn weight_pairings_match_tvector_pairings() {
        let mu = Weight::new(vec![2, 5, 1]);
        let x = Weight::new(vec![1, 0, 3]).to_tvector();
        assert_eq!(x.pair_weight(&mu), {
            // sum_j m_j <x, omega_j>
            (1..4).map(|j| x.pair_fundamental(j) * rat_int(mu.fund[j - 1])).sum()
        });
        let root = Root { lo: 1, hi: 2 };
        assert_eq!(root.pair_weight(&mu), 7);
        assert_eq!(mu.to_tvector().pair_root(root), rat_int(7));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn inner_product_is_weyl_invariant(
            coords in proptest::collection::vec(-8i64..8, 3),
            perm_seed in 0usize..24,
        ) {
            let s: Vec<Rat> = coords.iter().map(|&c| rat(c, 3)).collect();
            let x = TVector::from_simple_coords(&s);
            let y = TVector::from_simple_coords(&[rat(1, 2), rat(-1, 3), rat(2, 5)]);
            let rs = build_root_system(4).unwrap();
            let w = &rs.weyl_group()[perm_seed];
            prop_assert_eq!(w.apply(&x).inner(&w.apply(&y)), x.inner(&y));
        }

        #[test]
        fn basis_conversions_round_trip(coords in proptest::collection::vec(-9i64..9, 4)) {
            let s: Vec<Rat> = coords.iter().map(|&c| rat(c, 4)).collect();
            let x = TVector::from_simple_coords(&s);
            prop_assert_eq!(x.simple_coords(), s);
            let back = TVector::from_diag(x.diag().to_vec()).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn reduction_is_idempotent(coords in proptest::collection::vec(-30i64..30, 3)) {
            let s: Vec<Rat> = coords.iter().map(|&c| rat(c, 7)).collect();
            let x = TVector::from_simple_coords(&s);
            let r1 = reduce_to_fundamental_domain(&x);
            let r2 = reduce_to_fundamental_domain(&r1);
            prop_assert_eq!(&r1, &r2);
            for c in r1.simple_coords() {
                prop_assert!(c >= Rat::zero() && c < rat_int(1));
            }
        }
    }
}
