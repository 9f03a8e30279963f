//! Exact sparse Laurent polynomials in `q^(1/2)` and their x-graded truncated
//! extension.
//!
//! Every exponent is stored in half-steps: the key `e` stands for `q^(e/2)`,
//! so `q` itself is key `2` and `q^(1/2)` is key `1`. Coefficients are
//! arbitrary-precision integers and zero coefficients are never stored, which
//! makes structural equality the same thing as polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exponent measured in units of `q^(1/2)`.
pub type HalfExp = i64;

/// Converts a whole q-degree bound into the largest half-step exponent it keeps.
#[inline]
pub fn half_bound(q_degree: i64) -> HalfExp {
    2 * q_degree
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<HalfExp, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^(half_exp/2)`.
    pub fn monomial(c: impl Into<BigInt>, half_exp: HalfExp) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_exp, c);
        }
        Self { terms }
    }

    /// `q^e` for a whole exponent `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, 2 * e)
    }

    /// Builds a polynomial from `(half_exp, coeff)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (HalfExp, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense whole-exponent constructor: `coeffs[i]` is the coefficient of `q^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (2 * i as i64, c.clone().into())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (HalfExp, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, half_exp: HalfExp) -> BigInt {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    pub fn min_half_exp(&self) -> Option<HalfExp> {
        self.terms.keys().next().copied()
    }

    pub fn max_half_exp(&self) -> Option<HalfExp> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is a whole power of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// True when every coefficient is positive.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn add_term(&mut self, half_exp: HalfExp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(half_exp) {
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

    /// Multiplies by `q^(half_exp/2)`.
    pub fn shift(&self, half_exp: HalfExp) -> Self {
        if half_exp == 0 {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + half_exp, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Replaces `q` by `q^k`. `k = -1` is the `q -> 1/q` dualization.
    pub fn substitute_q_power(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroSubstitution);
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        })
    }

    /// Drops every term above `q^q_degree`.
    pub fn truncate(&self, q_degree: i64) -> Self {
        self.truncate_half(half_bound(q_degree))
    }

    /// Drops every term with half-step exponent above `max_half`.
    pub fn truncate_half(&self, max_half: HalfExp) -> Self {
        Self {
            terms: self
                .terms
                .range(..=max_half)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Product with every term above `max_half` discarded; never materializes
    /// the discarded part.
    pub fn mul_truncated(&self, other: &Self, max_half: HalfExp) -> Self {
        mul_impl(self, other, Some(max_half))
    }

    /// Lexicographically first exponent where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(HalfExp, BigInt, BigInt)> {
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ea, ca)), None) => return Some((**ea, (*ca).clone(), BigInt::zero())),
                (None, Some((eb, cb))) => return Some((**eb, BigInt::zero(), (*cb).clone())),
                (Some((ea, ca)), Some((eb, cb))) => {
                    if ea < eb {
                        return Some((**ea, (*ca).clone(), BigInt::zero()));
                    }
                    if eb < ea {
                        return Some((**eb, BigInt::zero(), (*cb).clone()));
                    }
                    if ca != cb {
                        return Some((**ea, (*ca).clone(), (*cb).clone()));
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn max_bits(p: &QPoly) -> u64 {
    p.terms.values().map(|c| c.bits()).max().unwrap_or(0)
}

/// Convolution over a dense accumulator indexed by `(e - lo) / stride`, where
/// the stride is the gcd of all exponent offsets. Coefficients are accumulated
/// in `i128` whenever the worst-case sum provably fits.
fn mul_impl(a: &QPoly, b: &QPoly, cap: Option<HalfExp>) -> QPoly {
    let (Some(alo), Some(ahi), Some(blo), Some(bhi)) = (
        a.min_half_exp(),
        a.max_half_exp(),
        b.min_half_exp(),
        b.max_half_exp(),
    ) else {
        return QPoly::zero();
    };
    let lo = alo + blo;
    let mut hi = ahi + bhi;
    if let Some(cap) = cap {
        if lo > cap {
            return QPoly::zero();
        }
        hi = hi.min(cap);
    }

    let mut stride = 0;
    for e in a.terms.keys() {
        stride = gcd(stride, e - alo);
    }
    for e in b.terms.keys() {
        stride = gcd(stride, e - blo);
    }
    if stride == 0 {
        stride = 1;
    }
    let len = ((hi - lo) / stride + 1) as usize;
    let index = |e: HalfExp, base: HalfExp| ((e - base) / stride) as usize;

    let n_min = a.len().min(b.len()) as u64;
    let sum_bits = max_bits(a) + max_bits(b) + (64 - n_min.leading_zeros() as u64);

    let mut out = QPoly::zero();
    if sum_bits <= 126 {
        let av: Vec<(usize, i128)> = a
            .terms
            .iter()
            .map(|(e, c)| (index(*e, alo), c.to_i128().expect("bounded by bit count")))
            .collect();
        let bv: Vec<(usize, i128)> = b
            .terms
            .iter()
            .map(|(e, c)| (index(*e, blo), c.to_i128().expect("bounded by bit count")))
            .collect();
        let mut acc = vec![0i128; len];
        for &(i, x) in &av {
            if i >= len {
                break;
            }
            for &(j, y) in &bv {
                let k = i + j;
                if k >= len {
                    break;
                }
                acc[k] += x * y;
            }
        }
        for (k, c) in acc.into_iter().enumerate() {
            if c != 0 {
                out.terms.insert(lo + k as i64 * stride, BigInt::from(c));
            }
        }
    } else {
        let mut acc = vec![BigInt::zero(); len];
        for (ea, x) in &a.terms {
            let i = index(*ea, alo);
            if i >= len {
                break;
            }
            for (eb, y) in &b.terms {
                let k = i + index(*eb, blo);
                if k >= len {
                    break;
                }
                acc[k] += x * y;
            }
        }
        for (k, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(lo + k as i64 * stride, c);
            }
        }
    }
    out
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign<QPoly> for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        if self.is_zero() {
            *self = rhs;
            return;
        }
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        mul_impl(self, rhs, None)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        mul_impl(&self, &rhs, None)
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, e: HalfExp) -> fmt::Result {
    match (e % 2 == 0, e / 2) {
        (true, 1) => write!(f, "q"),
        (true, k) if k >= 0 => write!(f, "q^{k}"),
        (true, k) => write!(f, "q^({k})"),
        (false, _) => write!(f, "q^({e}/2)"),
    }
}

/// Renders like `1 + q + 2 q^5 - q^(3/2)`, ascending.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                fmt_power(f, *e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Serialized as `[[half_exp, "coefficient"], ...]`, ascending.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(HalfExp, String)> = Vec::deserialize(d)?;
        let mut p = QPoly::zero();
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// How two series are combined stratum-wise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

/// A polynomial in `x` whose coefficients are [`QPoly`] values reduced modulo
/// `q^(T+1/2)`, i.e. only exponents `<= T` survive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    truncation: i64,
    strata: BTreeMap<u32, QPoly>,
}

impl XSeries {
    pub fn new(truncation: i64) -> Self {
        Self {
            truncation,
            strata: BTreeMap::new(),
        }
    }

    /// Truncation bound `T` in whole q-degrees.
    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    fn max_half(&self) -> HalfExp {
        half_bound(self.truncation)
    }

    /// Adds `x^x_degree * p`, truncating `p` first.
    pub fn add_term(&mut self, x_degree: u32, p: &QPoly) {
        let p = p.truncate_half(self.max_half());
        if p.is_zero() {
            return;
        }
        let slot = self.strata.entry(x_degree).or_default();
        *slot += p;
        if slot.is_zero() {
            self.strata.remove(&x_degree);
        }
    }

    /// Adds `coeff * x^x_degree * q^(half_exp/2)` when within the truncation.
    pub fn add_monomial(&mut self, x_degree: u32, half_exp: HalfExp, coeff: BigInt) {
        if half_exp > self.max_half() {
            return;
        }
        let slot = self.strata.entry(x_degree).or_default();
        slot.add_term(half_exp, coeff);
        if slot.is_zero() {
            self.strata.remove(&x_degree);
        }
    }

    pub fn stratum(&self, x_degree: u32) -> QPoly {
        self.strata.get(&x_degree).cloned().unwrap_or_default()
    }

    pub fn strata(&self) -> impl Iterator<Item = (u32, &QPoly)> + '_ {
        self.strata.iter().map(|(x, p)| (*x, p))
    }

    pub fn is_zero(&self) -> bool {
        self.strata.is_empty()
    }

    /// Sum of all strata, i.e. the series at `x = 1`.
    pub fn at_x_equals_one(&self) -> QPoly {
        let mut out = QPoly::zero();
        for p in self.strata.values() {
            out += p;
        }
        out
    }

    pub fn combine(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        let mut out = Self::new(self.truncation);
        match op {
            SeriesOp::Add => {
                for (x, p) in self.strata.iter().chain(other.strata.iter()) {
                    out.add_term(*x, p);
                }
            }
            SeriesOp::Mul => {
                for (xa, pa) in &self.strata {
                    for (xb, pb) in &other.strata {
                        out.add_term(xa + xb, &pa.mul_truncated(pb, self.max_half()));
                    }
                }
            }
        }
        Ok(out)
    }

    /// First differing `(x_degree, half_exp, self_coeff, other_coeff)` in
    /// lexicographic order.
    pub fn first_difference(&self, other: &Self) -> Option<(u32, HalfExp, BigInt, BigInt)> {
        let degrees: std::collections::BTreeSet<u32> = self
            .strata
            .keys()
            .chain(other.strata.keys())
            .copied()
            .collect();
        degrees.into_iter().find_map(|x| {
            self.stratum(x)
                .first_difference(&other.stratum(x))
                .map(|(e, l, r)| (x, e, l, r))
        })
    }
}

impl Serialize for XSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.strata.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &QPoly::q_pow(1), p(&[1, 2]));
        assert_eq!(&p(&[1, 1]) + &QPoly::zero(), p(&[1, 1]));
        let sum = &p(&[1, 1]) + &p(&[-1, -1]);
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        let root = QPoly::monomial(1, 1);
        assert_eq!(&root * &root, QPoly::q_pow(1));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1]), p(&[1, 0, 0, -1]));
    }

    #[test]
    fn mul_takes_bigint_path_for_huge_coefficients() {
        let big: BigInt = BigInt::from(1u8) << 100usize;
        let a = QPoly::from_terms([(0, big.clone()), (2, big.clone())]);
        let sq = &a * &a;
        assert_eq!(sq.coefficient(2), &big * &big * 2);
        assert_eq!(sq.coefficient(4), &big * &big);
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p(&[1, 1]).substitute_q_power(3).unwrap(), p(&[1, 0, 0, 1]));
        assert_eq!(
            p(&[0, 1, 1]).substitute_q_power(-1).unwrap(),
            QPoly::q_pow(-1) + QPoly::q_pow(-2)
        );
        assert_eq!(
            QPoly::monomial(1, 1).substitute_q_power(2).unwrap(),
            QPoly::q_pow(1)
        );
        assert_eq!(p(&[1]).substitute_q_power(0), Err(Error::ZeroSubstitution));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(p(&[1, 1, 0, 0, 0, 1]).truncate(3), p(&[1, 1]));
        assert!(QPoly::zero().truncate(4).is_zero());
        assert_eq!(p(&[1, 0, 1]).truncate(2), p(&[1, 0, 1]));
    }

    #[test]
    fn eval_and_coefficient_examples() {
        let l2 = p(&[1, 1, 1, 1, 1, 2, 1, 1]);
        assert_eq!(l2.eval_at_one(), BigInt::from(9));
        assert_eq!(QPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p(&[1, 1]).eval_at_one(), BigInt::from(2));
        assert_eq!(l2.coefficient(10), BigInt::from(2));
        assert_eq!(p(&[1, 1]).coefficient(6), BigInt::zero());
        assert_eq!(QPoly::monomial(1, 1).coefficient(1), BigInt::one());
    }

    #[test]
    fn display_matches_conventional_notation() {
        assert_eq!(
            p(&[1, 1, 1, 1, 1, 2, 1, 1]).to_string(),
            "1 + q + q^2 + q^3 + q^4 + 2 q^5 + q^6 + q^7"
        );
        assert_eq!(p(&[1, 0, 0, -1]).to_string(), "1 - q^3");
        assert_eq!(QPoly::monomial(-3, -1).to_string(), "-3 q^(-1/2)");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn serialization_is_ascending_pairs_with_string_coefficients() {
        let poly = QPoly::from_terms([(3, 2), (-2, -1)]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"[[-2,"-1"],[3,"2"]]"#);
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn xseries_examples() {
        let mut one = XSeries::new(10);
        one.add_term(0, &QPoly::one());
        let mut xq = XSeries::new(10);
        xq.add_term(1, &QPoly::q_pow(1));
        assert_eq!(one.combine(&xq, SeriesOp::Mul).unwrap(), xq);
        assert_eq!(one.combine(&XSeries::new(10), SeriesOp::Add).unwrap(), one);
        let sq = xq.combine(&xq, SeriesOp::Mul).unwrap();
        let mut expect = XSeries::new(10);
        expect.add_term(2, &QPoly::q_pow(2));
        assert_eq!(sq, expect);
        assert_eq!(
            one.combine(&XSeries::new(9), SeriesOp::Add),
            Err(Error::TruncationMismatch { left: 10, right: 9 })
        );
    }

    #[test]
    fn xseries_truncates_and_drops_empty_strata() {
        let mut s = XSeries::new(2);
        s.add_term(3, &QPoly::q_pow(5));
        assert!(s.is_zero());
        s.add_term(1, &p(&[0, 1, 1, 1]));
        assert_eq!(s.stratum(1), p(&[0, 1, 1]));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"1":[[2,"1"],[4,"1"]]}"#
        );
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec((-6i64..12, -20i64..20), 0..6).prop_map(QPoly::from_terms)
    }

    fn arb_nonneg_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec((0i64..16, -20i64..20), 0..6).prop_map(QPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn canonical_form_has_no_zero_terms(a in arb_poly(), b in arb_poly()) {
            for poly in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(poly.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn double_inversion_is_identity(a in arb_poly()) {
            let back = a.substitute_q_power(-1).unwrap().substitute_q_power(-1).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn evaluation_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn truncation_commutes_with_products(a in arb_nonneg_poly(), b in arb_nonneg_poly(), t in 0i64..8) {
            let direct = (&a * &b).truncate(t);
            let reduced = (&a.truncate(t) * &b.truncate(t)).truncate(t);
            prop_assert_eq!(&direct, &reduced);
            prop_assert_eq!(direct, a.mul_truncated(&b, half_bound(t)));
        }
    }
}
