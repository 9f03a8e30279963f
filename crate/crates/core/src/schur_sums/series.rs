//! The x-graded generating functions: bounded and unbounded.

use num_bigint::BigInt;

use crate::qcoeff::{
    gauss_binomial, pochhammer_finite, pochhammer_infinite_truncated, series_reciprocal_truncated,
    MonomialBase,
};
use crate::qpoly::{half_bound, QPoly, XSeries};
use crate::schur_sums::weights::{minimal_largest_part, weight_a, weight_k};

/// `1/(q^k; q^k)_i` for `i = 0..count`, keeping exponents `<= t`.
fn reciprocal_factorials(k: u32, count: i64, t: i64) -> Vec<QPoly> {
    let base = MonomialBase::q_power(1, k as i64, k).expect("valid base");
    (0..count.max(0))
        .map(|i| {
            series_reciprocal_truncated(&pochhammer_finite(base, i as u32), t)
                .expect("unit constant term")
        })
        .collect()
}

fn upper_count(t: i64) -> i64 {
    t.max(0) + 2
}

/// Bounded generating function: Schur partitions with every part `<= n`,
/// `x` counting parts, exponents `<= t`.
///
/// Each configuration contributes `q^A` times one binomial per mover family,
/// counting the motions that keep the largest part `<= n`. A configuration
/// whose minimal partition already exceeds `n` contributes nothing, and a
/// family without movers contributes 1.
pub fn bounded_gf(n: i64, t: i64) -> XSeries {
    bounded_gf_impl(n, t, false)
}

/// The summand exactly as displayed, summed over every configuration.
/// Misses the chains `(1, 4, ..., 3n1-2)` when `n = 3n1-2`.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn bounded_gf_literal(n: i64, t: i64) -> XSeries {
    bounded_gf_impl(n, t, true)
}

fn bounded_gf_impl(n: i64, t: i64, literal: bool) -> XSeries {
    let cap = half_bound(t);
    let mut out = XSeries::new(t);
    for m in 0.. {
        if weight_a(0, 0, m) > t {
            break;
        }
        for n2 in 0.. {
            if weight_a(0, n2, m) > t {
                break;
            }
            for n1 in 0.. {
                let a = weight_a(n1, n2, m);
                if a > t {
                    break;
                }
                if !literal && minimal_largest_part(n1, n2, m) > n {
                    continue;
                }
                let s = n1 + n2;
                let one = QPoly::one();
                let b1 = gauss_binomial(n - 3 * (s + m) + 1, m, 1);
                let b2 =
                    gauss_binomial((n - 3 * n1 + 2).div_euclid(3) - m - n2 + n1 / 2, n1 / 2, 6);
                let b3 = gauss_binomial((n - 3 * s + 1).div_euclid(3) - m + n2 / 2, n2 / 2, 6);
                let pick = |b: &QPoly, movers: i64| -> QPoly {
                    if !literal && movers == 0 {
                        one.clone()
                    } else {
                        b.clone()
                    }
                };
                let prod = pick(&b1, m)
                    .mul_truncated(&pick(&b2, n1 / 2), cap - 2 * a)
                    .mul_truncated(&pick(&b3, n2 / 2), cap - 2 * a);
                out.add_term((s + m) as u32, &prod.shift(2 * a));
            }
        }
    }
    out
}

/// `sum x^(n1+n2+m) q^A / ((q^6;q^6)_{n1/2} (q^6;q^6)_{n2/2} (q)_m)`.
pub fn ali_gf_truncated(t: i64) -> XSeries {
    let cap = half_bound(t);
    let r6 = reciprocal_factorials(6, upper_count(t), t);
    let r1 = reciprocal_factorials(1, upper_count(t), t);
    let mut out = XSeries::new(t);
    for m in 0.. {
        if weight_a(0, 0, m) > t {
            break;
        }
        for n2 in 0.. {
            if weight_a(0, n2, m) > t {
                break;
            }
            for n1 in 0.. {
                let a = weight_a(n1, n2, m);
                if a > t {
                    break;
                }
                let room = cap - 2 * a;
                let d = r6[(n1 / 2) as usize]
                    .mul_truncated(&r6[(n2 / 2) as usize], room)
                    .mul_truncated(&r1[m as usize], room);
                out.add_term((n1 + n2 + m) as u32, &d.shift(2 * a));
            }
        }
    }
    out
}

/// Calls `f(n1, n2, m, K, denominator)` for every triple with `K <= t`.
fn for_each_k_term(t: i64, mut f: impl FnMut(i64, i64, i64, i64, QPoly)) {
    let cap = half_bound(t);
    let r6 = reciprocal_factorials(6, upper_count(t), t);
    let r1 = reciprocal_factorials(1, upper_count(t), t);
    for m in 0.. {
        if weight_k(0, 0, m) > t {
            break;
        }
        for n2 in 0.. {
            if weight_k(0, n2, m) > t {
                break;
            }
            for n1 in 0.. {
                let k = weight_k(n1, n2, m);
                if k > t {
                    break;
                }
                let room = cap - 2 * k;
                let d = r6[n1 as usize]
                    .mul_truncated(&r6[n2 as usize], room)
                    .mul_truncated(&r1[m as usize], room);
                f(n1, n2, m, k, d);
            }
        }
    }
}

/// `sum x^(2n1+2n2+m) q^K / ((q^6;q^6)_{n1} (q^6;q^6)_{n2} (q)_m)`.
pub fn kursungoz_gf_truncated(t: i64) -> XSeries {
    let mut out = XSeries::new(t);
    for_each_k_term(t, |n1, n2, m, k, d| {
        out.add_term((2 * n1 + 2 * n2 + m) as u32, &d.shift(2 * k));
    });
    out
}

/// The even-odd split of [`ali_gf_truncated`], written with the weight `K + 2m`
/// and the factor `1 + x q^(S+1) + x q^(S+2) + x^2 q^(2S+6)`, `S = 6n1+6n2+3m`.
pub fn even_odd_split_lhs(t: i64) -> XSeries {
    let mut out = XSeries::new(t);
    for_each_k_term(t, |n1, n2, m, k, d| {
        let e = k + 2 * m;
        if e > t {
            return;
        }
        let x = (2 * n1 + 2 * n2 + m) as u32;
        let s6 = 6 * n1 + 6 * n2 + 3 * m;
        out.add_term(x, &d.shift(2 * e));
        out.add_term(x + 1, &d.shift(2 * (e + s6 + 1)));
        out.add_term(x + 1, &d.shift(2 * (e + s6 + 2)));
        out.add_term(x + 2, &d.shift(2 * (e + 2 * s6 + 6)));
    });
    out
}

/// `(-q, -q^2; q^3)_inf` keeping exponents `<= t`.
pub fn schur_product_truncated(t: i64) -> QPoly {
    let a = pochhammer_infinite_truncated(MonomialBase::q_power(-1, 1, 3).expect("valid base"), t)
        .expect("convergent");
    let b = pochhammer_infinite_truncated(MonomialBase::q_power(-1, 2, 3).expect("valid base"), t)
        .expect("convergent");
    a.mul_truncated(&b, half_bound(t))
}

/// Upper bound on the size of a Schur partition with parts `<= largest`:
/// at most one part in every window of three consecutive values.
pub fn bounded_size_limit(largest: i64) -> i64 {
    let mut total = 0;
    let mut part = largest;
    while part > 0 {
        total += part;
        part -= 3;
    }
    total
}

/// Sum of the coefficients of `x^k` at `x = 1`, as a map from size to count.
pub fn counts(series: &XSeries) -> Vec<BigInt> {
    let flat = series.at_x_equals_one();
    (0..=series.truncation())
        .map(|e| flat.coefficient(2 * e))
        .collect()
}
