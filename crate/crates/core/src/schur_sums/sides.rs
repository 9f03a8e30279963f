//! Both sides of every finite identity, built exactly.
//!
//! The triple sums over `(m, n1, n2)` share one shape: with `calN = N - m - n1 - n2`
//! and `s = n1 + n2`, the first binomial depends on `(calN, m)` only and the
//! two base-`q^6` binomials on `(calN, n1, n2)` only. Sums are therefore grouped
//! by `calN` and `s`, the inner `n1 + n2 = s` sum is formed once, and the
//! groups for distinct `calN` run in parallel.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::qcoeff::{
    gauss_binomial, pochhammer_finite, round_trinomial, series_reciprocal_truncated, t_trinomial,
    MonomialBase,
};
use crate::qpoly::{half_bound, HalfExp, QPoly};
use crate::schur_sums::weights::{weight_a, weight_q, ParityClass};

fn pair_binomials(nn: i64, n1: i64, n2: i64) -> QPoly {
    &*gauss_binomial(nn + n1 / 2, n1 / 2, 6) * &*gauss_binomial(nn + n2 / 2, n2 / 2, 6)
}

/// `(2m+s+1)(2m+s)/2 + ms + s^2`, the part of `A` that depends on `n1 + n2` only.
fn a_base(m: i64, s: i64) -> i64 {
    (2 * m + s + 1) * (2 * m + s) / 2 + m * s + s * s
}

/// `sum q^(outer/2) [3calN choose m] sum_{n1+n2=s} q^(inner/2) B6 B6`.
fn grouped_triple_sum<O, I>(n: i64, outer: O, inner: I) -> QPoly
where
    O: Fn(i64, i64, i64) -> HalfExp + Sync,
    I: Fn(i64, i64, i64) -> HalfExp + Sync,
{
    if n < 0 {
        return QPoly::zero();
    }
    (0..=n)
        .into_par_iter()
        .map(|nn| {
            let mut acc = QPoly::zero();
            for s in 0..=n - nn {
                let m = n - nn - s;
                let first = gauss_binomial(3 * nn, m, 1);
                if first.is_zero() {
                    continue;
                }
                let mut pairs = QPoly::zero();
                for n1 in 0..=s {
                    let n2 = s - n1;
                    pairs += pair_binomials(nn, n1, n2).shift(inner(nn, n1, n2));
                }
                acc += (&*first * &pairs).shift(outer(m, s, nn));
            }
            acc
        })
        .reduce(QPoly::zero, |a, b| a + b)
}

/// The single `(m, n1, n2)` summand of [`lhs_schur`]; zero outside its range.
pub fn lhs_summand(n: i64, m: i64, n1: i64, n2: i64) -> QPoly {
    let nn = n - m - n1 - n2;
    if m < 0 || n1 < 0 || n2 < 0 || nn < 0 {
        return QPoly::zero();
    }
    (&*gauss_binomial(3 * nn, m, 1) * &pair_binomials(nn, n1, n2)).shift(2 * weight_a(n1, n2, m))
}

/// Left side of the polynomial identity; zero for negative `N`.
pub fn lhs_schur(n: i64) -> QPoly {
    grouped_triple_sum(n, |m, s, _| 2 * a_base(m, s), |_, n1, _| -2 * n1)
}

/// Right side: `sum_j q^(j(3j-1)/2) (N; j; q^3 choose j)_2`.
pub fn rhs_schur(n: i64) -> QPoly {
    if n < 0 {
        return QPoly::zero();
    }
    (-n..=n)
        .into_par_iter()
        .map(|j| round_trinomial(n, j, j, 3).shift(j * (3 * j - 1)))
        .reduce(QPoly::zero, |a, b| a + b)
}

/// `sum q^(B - A) [..][..][..]` without any normalization; half-step exponents.
fn dual_lhs_raw(n: i64) -> QPoly {
    grouped_triple_sum(
        n,
        |m, s, nn| 3 * n * n - 2 * (3 * nn - m) * m - 2 * a_base(m, s),
        |nn, n1, n2| 2 * n1 - 12 * nn * (n1 / 2 + n2 / 2),
    )
}

/// `sum_j q^((N+j)/2) T_0(N; q^3 choose j)`.
fn t0_sum(n: i64) -> QPoly {
    (-n..=n)
        .into_par_iter()
        .map(|j| t_trinomial(0, n, j, 3).shift(n + j))
        .reduce(QPoly::zero, |a, b| a + b)
}

/// Both sides of the `q -> 1/q` dual identity, each multiplied by `q^(N/2)`.
pub fn dual_sides(n: i64) -> (QPoly, QPoly) {
    (dual_lhs_raw(n).shift(n), t0_sum(n))
}

/// `q^(3N^2/2 + N/2) L_N(1/q)`, an independent route to the dual left side.
pub fn dual_oracle(n: i64) -> QPoly {
    lhs_schur(n)
        .substitute_q_power(-1)
        .expect("nonzero substitution")
        .shift(3 * n * n + n)
}

fn minus_q_base(e: i64) -> MonomialBase {
    MonomialBase::q_power(-1, e, 3).expect("valid base")
}

/// `sum_j q^((N+j)/2) T_0(N; q^3 choose j)` against
/// `sum_k q^k [N choose k]_{q^3} (-q^2; q^3)_{N-k}`.
pub fn t0_binomial_identity(n: i64) -> (QPoly, QPoly) {
    let rhs = (0..=n)
        .into_par_iter()
        .map(|k| {
            (&*gauss_binomial(n, k, 3) * &pochhammer_finite(minus_q_base(2), (n - k) as u32))
                .shift(2 * k)
        })
        .reduce(QPoly::zero, |a, b| a + b);
    (t0_sum(n), rhs)
}

/// `1 / ((q^2; q^3)_inf (q; q^6)_inf)` keeping exponents `<= t`.
pub fn t0_limit_rhs(t: i64) -> QPoly {
    let cap = half_bound(t);
    let a = pochhammer_finite(
        MonomialBase::q_power(1, 2, 3).expect("valid base"),
        (t.max(0) / 3 + 1) as u32,
    );
    let b = pochhammer_finite(
        MonomialBase::q_power(1, 1, 6).expect("valid base"),
        (t.max(0) / 6 + 1) as u32,
    );
    series_reciprocal_truncated(&a.mul_truncated(&b, cap), t).expect("unit constant term")
}

/// The T_0 sum at `N`, truncated at `t`, against the limiting product.
pub fn t0_limit_sides(n: i64, t: i64) -> (QPoly, QPoly) {
    (t0_sum(n).truncate(t), t0_limit_rhs(t))
}

/// `sum_{m,n1,y} q^(Q_t) / (q^6;q^6)_y [3y choose m] [y + floor(n1/2) choose y]_{q^6}`
/// keeping exponents `<= t_bound`.
pub fn qt_limit_sum(class: ParityClass, t_bound: i64) -> QPoly {
    let cap = half_bound(t_bound);
    let mut out = QPoly::zero();
    let mut y = 0;
    // Q_t >= y(3y+1)/2 + n1 + C(m,2), so every loop below stops structurally.
    while y * (3 * y + 1) / 2 <= t_bound {
        let recip = series_reciprocal_truncated(
            &pochhammer_finite(
                MonomialBase::q_power(1, 6, 6).expect("valid base"),
                y as u32,
            ),
            t_bound,
        )
        .expect("unit constant term");
        for m in 0..=3 * y {
            if m * (m - 1) / 2 + y * (3 * y + 1) / 2 > t_bound {
                break;
            }
            let first = recip.mul_truncated(&gauss_binomial(3 * y, m, 1), cap);
            for n1 in 0..=t_bound {
                let e = weight_q(m, n1, y, class);
                if m * (m - 1) / 2 + y * (3 * y + 1) / 2 + n1 > t_bound {
                    break;
                }
                if e > t_bound {
                    continue;
                }
                let b = gauss_binomial(y + n1 / 2, y, 6);
                out += first.mul_truncated(&b, cap - 2 * e).shift(2 * e);
            }
        }
        y += 1;
    }
    out
}

/// Left side: `sum_N q^(3N^2/2) [M choose N]_{q^3} sum q^(B-A) ...`.
/// Right side: `(-q, -q^2; q^3)_M`.
pub fn summation_formula_sides(big_m: i64) -> (QPoly, QPoly) {
    let lhs = (0..=big_m)
        .into_par_iter()
        .map(|n| (&*gauss_binomial(big_m, n, 3) * &dual_lhs_raw(n)).shift(3 * n * n))
        .reduce(QPoly::zero, |a, b| a + b);
    let len = big_m.max(0) as u32;
    let rhs = &pochhammer_finite(minus_q_base(1), len) * &pochhammer_finite(minus_q_base(2), len);
    (lhs, rhs)
}

/// `sum_i q^(i^2/2) [L choose i] T_0(i; q choose a)` against
/// `q^(a^2/2) [2L choose L-a]`.
pub fn warnaar_sides(l: i64, a: i64) -> (QPoly, QPoly) {
    let mut lhs = QPoly::zero();
    for i in 0..=l {
        lhs += (&*gauss_binomial(l, i, 1) * &t_trinomial(0, i, a, 1)).shift(i * i);
    }
    let rhs = gauss_binomial(2 * l, l - a, 1).shift(a * a);
    (lhs, rhs)
}

/// The triple sum at `q = 1` with ordinary binomials and `calM = M - n1 - n2 - m`.
pub fn q1_triple_sum(big_m: i64) -> BigInt {
    let mut total = BigInt::zero();
    for m in 0..=big_m {
        for n1 in 0..=big_m - m {
            for n2 in 0..=big_m - m - n1 {
                let mm = big_m - m - n1 - n2;
                total +=
                    binomial(3 * mm, m) * binomial(mm + n1 / 2, mm) * binomial(mm + n2 / 2, mm);
            }
        }
    }
    total
}

/// `sum_N C(M, N) * q1_triple_sum(N)`.
pub fn q1_quad_sum(big_m: i64) -> BigInt {
    (0..=big_m)
        .map(|n| binomial(big_m, n) * q1_triple_sum(n))
        .sum()
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    #[test]
    fn initial_values_of_both_sides() {
        let listed = [
            p(&[1]),
            p(&[1, 1, 1]),
            p(&[1, 1, 1, 1, 1, 2, 1, 1]),
            p(&[1, 1, 1, 1, 1, 2, 2, 3, 3, 2, 2, 2, 2, 2, 1, 1]),
        ];
        for (n, want) in listed.iter().enumerate() {
            assert_eq!(&lhs_schur(n as i64), want, "L_{n}");
            assert_eq!(&rhs_schur(n as i64), want, "R_{n}");
        }
        assert_eq!(
            lhs_schur(2).to_string(),
            "1 + q + q^2 + q^3 + q^4 + 2 q^5 + q^6 + q^7"
        );
    }

    #[test]
    fn negative_n_is_zero() {
        assert!(lhs_schur(-1).is_zero());
        assert!(rhs_schur(-2).is_zero());
    }

    #[test]
    fn grouped_sum_matches_direct_summands() {
        for n in 0..=6 {
            let mut direct = QPoly::zero();
            for m in 0..=n {
                for n1 in 0..=n - m {
                    for n2 in 0..=n - m - n1 {
                        direct += lhs_summand(n, m, n1, n2);
                    }
                }
            }
            assert_eq!(direct, lhs_schur(n));
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_sides(0), (QPoly::one(), QPoly::one()));
        let (l, r) = dual_sides(1);
        assert_eq!(l, p(&[1, 1, 1]));
        assert_eq!(r, p(&[1, 1, 1]));
        for n in 0..=6 {
            let (l, r) = dual_sides(n);
            assert_eq!(l, r, "N={n}");
            assert_eq!(l, dual_oracle(n), "oracle N={n}");
        }
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0_binomial_identity(0), (QPoly::one(), QPoly::one()));
        let (l, r) = t0_binomial_identity(1);
        assert_eq!(r, p(&[1, 1, 1]));
        assert_eq!(l, r);
        let (l, r) = t0_binomial_identity(2);
        assert_eq!(l, r);
    }

    #[test]
    fn qt_examples() {
        assert_eq!(qt_limit_sum(ParityClass::One, 0), QPoly::one());
        let rhs = t0_limit_rhs(30);
        assert_eq!(qt_limit_sum(ParityClass::One, 30), rhs);
        assert_eq!(qt_limit_sum(ParityClass::Two, 30), rhs);
    }

    #[test]
    fn summation_examples() {
        assert_eq!(summation_formula_sides(0), (QPoly::one(), QPoly::one()));
        let (l, r) = summation_formula_sides(1);
        assert_eq!(r, &p(&[1, 1]) * &p(&[1, 0, 1]));
        assert_eq!(l, r);
        let (l, r) = summation_formula_sides(2);
        assert_eq!(l, r);
    }

    #[test]
    fn warnaar_examples() {
        assert_eq!(warnaar_sides(0, 0), (QPoly::one(), QPoly::one()));
        let (l, r) = warnaar_sides(1, 1);
        assert_eq!(r, QPoly::monomial(1, 1));
        assert_eq!(l, r);
        let (l, r) = warnaar_sides(3, 0);
        assert_eq!(l, r);
    }

    #[test]
    fn q1_sums() {
        for m in 0..=6 {
            assert_eq!(q1_triple_sum(m), BigInt::from(3).pow(m as u32));
            assert_eq!(q1_quad_sum(m), BigInt::from(4).pow(m as u32));
        }
    }
}
