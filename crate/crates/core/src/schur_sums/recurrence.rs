//! Instances of the three recurrences, as explicit (left, right) pairs.

use serde::{Deserialize, Serialize};

use crate::qpoly::QPoly;
use crate::schur_sums::sides::{lhs_schur, lhs_summand, rhs_schur};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RecurrenceKind {
    /// Three-term recurrence of the trinomial side.
    Andrews,
    /// Five-term recurrence of the summed left side.
    LeftSum,
    /// Termwise recurrence of a single summand.
    Summand,
}

fn poly(exps: &[(i64, i64)]) -> QPoly {
    QPoly::from_terms(exps.iter().map(|&(e, c)| (2 * e, c)))
}

/// Left side and right side of one recurrence instance. `(m, n1, n2)` is
/// only read for [`RecurrenceKind::Summand`].
pub fn recurrence_sides(kind: RecurrenceKind, n: i64, m: i64, n1: i64, n2: i64) -> (QPoly, QPoly) {
    match kind {
        RecurrenceKind::Andrews => {
            let r1 = rhs_schur(n - 1);
            let r2 = rhs_schur(n - 2);
            let rhs = &poly(&[(0, 1), (3 * n - 2, 1), (3 * n - 1, 1)]) * &r1
                + &poly(&[(3 * n - 3, 1), (6 * n - 6, -1)]) * &r2;
            (rhs_schur(n), rhs)
        }
        RecurrenceKind::LeftSum => {
            let l = |k: i64| lhs_schur(n - k);
            let rhs = l(1)
                + &poly(&[
                    (3 * n - 3, 1),
                    (3 * n - 2, 1),
                    (3 * n - 1, 1),
                    (6 * n - 7, 1),
                    (6 * n - 5, 1),
                ]) * &l(2)
                + &poly(&[(6 * n - 8, 1), (6 * n - 7, 1), (6 * n - 6, 1)]) * &l(3)
                + &poly(&[(9 * n - 15, 1), (12 * n - 24, -1)]) * &l(4);
            (lhs_schur(n), rhs)
        }
        RecurrenceKind::Summand => summand_sides(n, m, n1, n2, 2),
    }
}

/// The summand recurrence with the chain counts lowered by `step` in the
/// `q^(6N-5)`, `q^(6N-7)` and `q^(12N-24)` terms. It holds termwise for
/// `step = 2`, i.e. when one pair leaves a chain; `step = 1` is the printed form.
pub(crate) fn summand_sides(n: i64, m: i64, n1: i64, n2: i64, step: i64) -> (QPoly, QPoly) {
    let f = lhs_summand;
    let tri = |e: i64| poly(&[(e, 1), (e + 1, 1), (e + 2, 1)]);
    let rhs = f(n - 1, m, n1, n2)
        + f(n - 2, m, n1, n2 - step).shift(2 * (6 * n - 5))
        + f(n - 2, m, n1 - step, n2).shift(2 * (6 * n - 7))
        + &tri(3 * n - 3) * &f(n - 2, m - 1, n1, n2)
        + &tri(6 * n - 8) * &f(n - 3, m - 2, n1, n2)
        - f(n - 4, m, n1 - step, n2 - step).shift(2 * (12 * n - 24))
        + f(n - 4, m - 3, n1, n2).shift(2 * (9 * n - 15));
    (f(n, m, n1, n2), rhs)
}

/// Left minus right; the zero polynomial when the instance holds.
pub fn recurrence_residual(kind: RecurrenceKind, n: i64, m: i64, n1: i64, n2: i64) -> QPoly {
    let (l, r) = recurrence_sides(kind, n, m, n1, n2);
    l - r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_examples() {
        assert!(recurrence_residual(RecurrenceKind::Andrews, 2, 0, 0, 0).is_zero());
        assert!(recurrence_residual(RecurrenceKind::LeftSum, 4, 0, 0, 0).is_zero());
        assert!(recurrence_residual(RecurrenceKind::Summand, 5, 1, 1, 1).is_zero());
    }

    #[test]
    fn printed_summand_shifts_fail_termwise() {
        let (l, r) = summand_sides(4, 0, 0, 1, 1);
        assert_ne!(l, r);
        let (l, r) = summand_sides(4, 0, 0, 1, 2);
        assert_eq!(l, r);
    }

    #[test]
    fn summand_recurrence_small() {
        for n in 4..=8 {
            for m in 0..=n {
                for n1 in 0..=n - m {
                    for n2 in 0..=n - m - n1 {
                        assert!(
                            recurrence_residual(RecurrenceKind::Summand, n, m, n1, n2).is_zero(),
                            "N={n} m={m} n1={n1} n2={n2}"
                        );
                    }
                }
            }
        }
    }
}
