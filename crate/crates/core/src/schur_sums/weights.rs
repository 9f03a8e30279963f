//! Quadratic weights of the sums. `A`, `K` and `Q` are whole q-degrees;
//! `B` carries a `3N^2/2` term and is returned in half-steps.

use crate::error::{Error, Result};
use crate::qpoly::HalfExp;

/// Size of the minimal configuration with chains `n1`, `n2` and `m` singletons.
pub fn weight_a(n1: i64, n2: i64, m: i64) -> i64 {
    let s = n1 + n2;
    (2 * m + s + 1) * (2 * m + s) / 2 + m * s + s * s - n1
}

pub fn weight_k(n1: i64, n2: i64, m: i64) -> i64 {
    let s = n1 + n2;
    6 * s * s + 2 * m * m + 6 * m * s - n1 + n2 - m
}

/// `B(n1, n2, m, N)` in half-steps. Requires `N - n1 - n2 - m >= 0`.
pub fn weight_b(n1: i64, n2: i64, m: i64, n: i64) -> Result<HalfExp> {
    let nn = n - n1 - n2 - m;
    if nn < 0 || n1 < 0 || n2 < 0 || m < 0 {
        return Err(Error::InvalidWeightArgs(format!(
            "B({n1},{n2},{m},{n}) needs non-negative counts with n1+n2+m <= N"
        )));
    }
    Ok(3 * n * n - 2 * (3 * nn - m) * m - 12 * nn * (n1 / 2 + n2 / 2))
}

/// Which parity of `N` the limit of the dual sum is taken along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ParityClass {
    One,
    Two,
}

impl ParityClass {
    pub fn from_t(t: i64) -> Result<Self> {
        match t {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            _ => Err(Error::Usage(format!("t must be 1 or 2, got {t}"))),
        }
    }

    pub fn t(self) -> i64 {
        match self {
            Self::One => 1,
            Self::Two => 2,
        }
    }
}

pub fn weight_q(m: i64, n1: i64, y: i64, class: ParityClass) -> i64 {
    let t = class.t();
    let r = |v: i64| v.rem_euclid(2);
    m * (m - 1) / 2
        + y * (3 * y + 1) / 2
        + n1
        + 3 * y * r(m + y + t)
        + 6 * y * r(n1) * r(m + y + 1 + t)
}

/// Largest part of the minimal configuration, 0 when it is empty.
pub fn minimal_largest_part(n1: i64, n2: i64, m: i64) -> i64 {
    let s = n1 + n2;
    if m > 0 {
        3 * s + 3 + 4 * (m - 1)
    } else if n2 > 0 {
        3 * s - 1
    } else if n1 > 0 {
        3 * n1 - 2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_a_examples() {
        assert_eq!(weight_a(0, 0, 0), 0);
        assert_eq!(weight_a(1, 1, 0), 6);
        assert_eq!(weight_a(2, 1, 1), 25);
    }

    #[test]
    fn weight_k_examples() {
        assert_eq!(weight_k(0, 0, 0), 0);
        assert_eq!(weight_k(1, 0, 0), 5);
        assert_eq!(weight_a(2, 0, 0) - weight_k(1, 0, 0), 0);
    }

    #[test]
    fn exponent_difference() {
        for n1 in 0..=20 {
            for n2 in 0..=20 {
                for m in 0..=20 {
                    assert_eq!(weight_a(2 * n1, 2 * n2, m) - weight_k(n1, n2, m), 2 * m);
                }
            }
        }
    }

    #[test]
    fn weight_b_examples() {
        assert_eq!(weight_b(0, 0, 0, 0), Ok(0));
        assert_eq!(weight_b(0, 0, 0, 2), Ok(12));
        assert_eq!(weight_b(0, 0, 1, 1), Ok(5));
        assert!(weight_b(1, 1, 1, 2).is_err());
    }

    #[test]
    fn weight_q_examples() {
        for class in [ParityClass::One, ParityClass::Two] {
            assert_eq!(weight_q(0, 0, 0, class), 0);
        }
        // The substitution (m, n1, y) = (0, 1, 1) gives 9; the value 2 belongs to (0, 0, 1).
        assert_eq!(weight_q(0, 0, 1, ParityClass::One), 2);
        assert_eq!(weight_q(0, 1, 1, ParityClass::One), 9);
        assert_eq!(weight_q(1, 0, 1, ParityClass::Two), 2);
    }

    #[test]
    fn minimal_largest_parts() {
        assert_eq!(minimal_largest_part(0, 0, 0), 0);
        assert_eq!(minimal_largest_part(2, 1, 1), 12);
        assert_eq!(minimal_largest_part(1, 1, 0), 5);
        assert_eq!(minimal_largest_part(3, 0, 0), 7);
    }
}
