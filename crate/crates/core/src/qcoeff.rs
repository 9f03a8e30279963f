//! q-Pochhammer symbols, Gaussian binomials, q-trinomials and truncated
//! infinite products.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::{half_bound, HalfExp, QPoly};

/// The monomial `sign * q^(half_exp/2)` together with the base `q^modulus`
/// of a Pochhammer symbol `(a; q^modulus)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialBase {
    sign: i8,
    half_exp: HalfExp,
    modulus: u32,
}

impl MonomialBase {
    pub fn new(sign: i32, half_exp: HalfExp, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        match sign {
            1 | -1 => Ok(Self {
                sign: sign as i8,
                half_exp,
                modulus,
            }),
            s => Err(Error::InvalidSign(s)),
        }
    }

    /// `a = sign * q^e` with a whole exponent `e`, base `q^modulus`.
    pub fn q_power(sign: i32, e: i64, modulus: u32) -> Result<Self> {
        Self::new(sign, 2 * e, modulus)
    }

    pub fn sign(&self) -> i32 {
        self.sign as i32
    }

    pub fn half_exp(&self) -> HalfExp {
        self.half_exp
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `1 - a q^(modulus*i)`.
    fn factor(&self, i: i64) -> QPoly {
        let e = self.half_exp + 2 * self.modulus as i64 * i;
        let mut f = QPoly::one();
        f.add_term(e, BigInt::from(-self.sign as i32));
        f
    }
}

/// `(a; q^k)_n = prod_{i<n} (1 - a q^(k i))`.
pub fn pochhammer_finite(a: MonomialBase, n: u32) -> QPoly {
    (0..n as i64).fold(QPoly::one(), |acc, i| &acc * &a.factor(i))
}

/// `(a; q^k)_inf` with every term above `q^t` dropped.
pub fn pochhammer_infinite_truncated(a: MonomialBase, t: i64) -> Result<QPoly> {
    if a.half_exp <= 0 {
        return Err(Error::DivergentProduct(a.half_exp));
    }
    let cap = half_bound(t);
    let mut acc = QPoly::one().truncate_half(cap);
    let mut i = 0;
    while a.half_exp + 2 * a.modulus as i64 * i <= cap {
        acc = acc.mul_truncated(&a.factor(i), cap);
        i += 1;
    }
    Ok(acc)
}

/// `1/p` as a power series, reduced so that only exponents `<= t` survive.
pub fn series_reciprocal_truncated(p: &QPoly, t: i64) -> Result<QPoly> {
    if let Some(lo) = p.min_half_exp() {
        if lo < 0 {
            return Err(Error::NegativeExponent(lo));
        }
    }
    let c0 = p.coefficient(0);
    let unit = if c0.is_one() {
        1
    } else if c0 == BigInt::from(-1) {
        -1
    } else {
        return Err(Error::NonUnitConstant(c0.to_string()));
    };
    let cap = half_bound(t);
    if cap < 0 {
        return Ok(QPoly::zero());
    }
    let tail: Vec<(usize, &BigInt)> = p
        .terms()
        .filter(|(e, _)| *e > 0 && *e <= cap)
        .map(|(e, c)| (e as usize, c))
        .collect();
    let len = cap as usize + 1;
    let mut r = vec![BigInt::zero(); len];
    r[0] = BigInt::from(unit);
    for n in 1..len {
        let mut s = BigInt::zero();
        for &(k, c) in &tail {
            if k > n {
                break;
            }
            if !r[n - k].is_zero() {
                s += c * &r[n - k];
            }
        }
        if !s.is_zero() {
            r[n] = if unit == 1 { -s } else { s };
        }
    }
    Ok(QPoly::from_terms(
        r.into_iter().enumerate().map(|(i, c)| (i as HalfExp, c)),
    ))
}

type BinomKey = (i64, i64, u32);

fn binomial_cache() -> &'static Mutex<HashMap<BinomKey, Arc<QPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<BinomKey, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `[n choose k]_q` via the product formula on a dense coefficient vector:
/// multiply by `1 - q^(n-k+i)`, then divide exactly by `1 - q^i`.
fn gauss_binomial_dense(n: i64, k: i64) -> Vec<BigInt> {
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let deg = k * (n - k);
    let mut c = vec![BigInt::zero(); deg + n + 1];
    c[0] = BigInt::one();
    let mut cur = 0;
    for i in 1..=k {
        let a = n - k + i;
        for j in (a..=cur + a).rev() {
            let v = c[j - a].clone();
            c[j] -= v;
        }
        cur += a;
        for j in i..=cur {
            let v = c[j - i].clone();
            c[j] += v;
        }
        cur -= i;
    }
    c.truncate(deg + 1);
    c
}

/// Gaussian binomial `[top choose bottom]` in base `q^modulus`; zero unless
/// `0 <= bottom <= top`. Results are memoized process-wide.
pub fn gauss_binomial(top: i64, bottom: i64, modulus: u32) -> Arc<QPoly> {
    if bottom < 0 || bottom > top {
        return Arc::new(QPoly::zero());
    }
    let bottom = bottom.min(top - bottom);
    let key = (top, bottom, modulus);
    if let Some(hit) = binomial_cache().lock().expect("cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let step = 2 * modulus.max(1) as i64;
    let poly = QPoly::from_terms(
        gauss_binomial_dense(top, bottom)
            .into_iter()
            .enumerate()
            .map(|(i, c)| (step * i as i64, c)),
    );
    let poly = Arc::new(poly);
    binomial_cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, Arc::clone(&poly));
    poly
}

/// Round q-trinomial `(m; b; q choose a)_2` in base `q^modulus`.
pub fn round_trinomial(m: i64, b: i64, a: i64, modulus: u32) -> QPoly {
    let mut out = QPoly::zero();
    if m < 0 {
        return out;
    }
    let md = modulus as i64;
    let mut k = (-a).max(0);
    while 2 * k + a <= m {
        let term = &*gauss_binomial(m, k, modulus) * &*gauss_binomial(m - k, k + a, modulus);
        out += term.shift(2 * md * k * (k + b));
        k += 1;
    }
    out
}

/// `T_n(m; q choose a)` in base `q^modulus`. The prefactor exponent
/// `modulus*(m(m-n) - a(a-n))/2` may be a half-integer.
pub fn t_trinomial(n_sub: i64, m: i64, a: i64, modulus: u32) -> QPoly {
    let inner = round_trinomial(m, a - n_sub, a, modulus)
        .substitute_q_power(-1)
        .expect("nonzero substitution");
    inner.shift(modulus as i64 * (m * (m - n_sub) - a * (a - n_sub)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    fn q_base(k: u32) -> MonomialBase {
        MonomialBase::q_power(1, k as i64, k).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_finite(q_base(1), 2), p(&[1, -1, -1, 1]));
        let minus_q = MonomialBase::q_power(-1, 1, 3).unwrap();
        assert_eq!(pochhammer_finite(minus_q, 1), p(&[1, 1]));
        assert_eq!(pochhammer_finite(minus_q, 0), QPoly::one());
    }

    #[test]
    fn monomial_base_validation() {
        assert_eq!(MonomialBase::new(1, 2, 0), Err(Error::ZeroModulus));
        assert_eq!(MonomialBase::new(2, 2, 1), Err(Error::InvalidSign(2)));
    }

    #[test]
    fn infinite_pochhammer_examples() {
        let minus_q = MonomialBase::q_power(-1, 1, 3).unwrap();
        assert_eq!(
            pochhammer_infinite_truncated(minus_q, 2).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            pochhammer_infinite_truncated(q_base(1), 1).unwrap(),
            p(&[1, -1])
        );
        assert_eq!(
            pochhammer_infinite_truncated(minus_q, 0).unwrap(),
            QPoly::one()
        );
        let flat = MonomialBase::q_power(1, 0, 1).unwrap();
        assert_eq!(
            pochhammer_infinite_truncated(flat, 5),
            Err(Error::DivergentProduct(0))
        );
    }

    #[test]
    fn infinite_pochhammer_is_stable_finite_product() {
        let a = MonomialBase::q_power(-1, 2, 3).unwrap();
        let t = 20;
        let finite = pochhammer_finite(a, 10).truncate(t);
        assert_eq!(pochhammer_infinite_truncated(a, t).unwrap(), finite);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            series_reciprocal_truncated(&p(&[1, -1]), 2).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(
            series_reciprocal_truncated(&QPoly::one(), 5).unwrap(),
            QPoly::one()
        );
        let qq2 = pochhammer_finite(q_base(1), 2);
        assert_eq!(series_reciprocal_truncated(&qq2, 2).unwrap(), p(&[1, 1, 2]));
        assert!(matches!(
            series_reciprocal_truncated(&p(&[2, 1]), 3),
            Err(Error::NonUnitConstant(_))
        ));
        assert_eq!(
            series_reciprocal_truncated(&p(&[-1, 1]), 2).unwrap(),
            p(&[-1, -1, -1])
        );
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(*gauss_binomial(2, 1, 1), p(&[1, 1]));
        assert_eq!(*gauss_binomial(4, 2, 1), p(&[1, 1, 2, 1, 1]));
        assert!(gauss_binomial(1, 2, 1).is_zero());
        assert!(gauss_binomial(3, -1, 1).is_zero());
        assert_eq!(*gauss_binomial(0, 0, 6), QPoly::one());
        assert_eq!(*gauss_binomial(2, 1, 3), p(&[1, 0, 0, 1]));
    }

    #[test]
    fn binomial_symmetry_and_palindromy() {
        for n in 0..=12 {
            for k in 0..=n {
                let b = gauss_binomial(n, k, 1);
                assert_eq!(*b, *gauss_binomial(n, n - k, 1));
                assert!(b.has_nonnegative_coefficients());
                let d = k * (n - k);
                assert_eq!(b.max_half_exp(), Some(2 * d));
                for e in 0..=d {
                    assert_eq!(b.coefficient(2 * e), b.coefficient(2 * (d - e)));
                }
            }
        }
    }

    #[test]
    fn binomial_inversion() {
        for total in 0..=12i64 {
            for m in 0..=total {
                let n = total - m;
                let b = gauss_binomial(total, m, 1);
                assert_eq!(b.substitute_q_power(-1).unwrap(), b.shift(-2 * m * n));
            }
        }
    }

    #[test]
    fn binomial_limit() {
        for m in 0..=6u32 {
            let recip = series_reciprocal_truncated(&pochhammer_finite(q_base(1), m), 30).unwrap();
            for t in 0..=30i64 {
                let b = gauss_binomial(t + m as i64, m as i64, 1).truncate(t);
                assert_eq!(b, recip.truncate(t), "m={m} T={t}");
            }
        }
    }

    #[test]
    fn pochhammer_inversion() {
        for n in 0..=10u32 {
            let poch = pochhammer_finite(q_base(1), n);
            let c = (n as i64) * (n as i64 + 1) / 2;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expect = poch.shift(-2 * c).scale(&BigInt::from(sign));
            assert_eq!(poch.substitute_q_power(-1).unwrap(), expect, "n={n}");
        }
    }

    #[test]
    fn pochhammer_shift() {
        // (a;q)_{n-k} (q^{1-n}/a; q)_k = (a;q)_n (-q/a)^k q^{C(k,2) - nk}
        for a_exp in 1..=3i64 {
            for n in 0..=8i64 {
                for k in 0..=n {
                    let a = MonomialBase::q_power(1, a_exp, 1).unwrap();
                    let inv = MonomialBase::q_power(1, 1 - n - a_exp, 1).unwrap();
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let mono_exp = k * (1 - a_exp) + k * (k - 1) / 2 - n * k;
                    let lhs =
                        &pochhammer_finite(a, (n - k) as u32) * &pochhammer_finite(inv, k as u32);
                    let rhs = pochhammer_finite(a, n as u32)
                        .shift(2 * mono_exp)
                        .scale(&BigInt::from(sign));
                    assert_eq!(lhs, rhs, "a=q^{a_exp} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(round_trinomial(1, 1, 1, 1), QPoly::one());
        assert_eq!(round_trinomial(1, -1, -1, 1), QPoly::one());
        assert_eq!(round_trinomial(2, 0, 0, 1).eval_at_one(), BigInt::from(3));
        assert!(round_trinomial(-1, 0, 0, 1).is_zero());

        assert_eq!(t_trinomial(0, 1, 0, 1), QPoly::monomial(1, 1));
        assert_eq!(t_trinomial(0, 0, 0, 1), QPoly::one());
        assert_eq!(t_trinomial(0, 1, 1, 1), QPoly::one());
    }

    #[test]
    fn trinomials_at_one_are_trinomial_coefficients() {
        for n in 0..=8i64 {
            // coefficients of (1 + x + x^2)^n
            let mut row = vec![BigInt::one()];
            for _ in 0..n {
                let mut next = vec![BigInt::zero(); row.len() + 2];
                for (i, c) in row.iter().enumerate() {
                    for d in 0..3 {
                        next[i + d] += c;
                    }
                }
                row = next;
            }
            for j in -n..=n {
                let got = round_trinomial(n, j, j, 1).eval_at_one();
                assert_eq!(got, row[(j + n) as usize], "n={n} j={j}");
            }
        }
    }
}
