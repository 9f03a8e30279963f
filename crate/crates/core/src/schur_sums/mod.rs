//! Weights, identity sides, generating functions and the verifier.

pub mod recurrence;
pub mod series;
pub mod sides;
pub mod verify;
pub mod weights;

pub use recurrence::{recurrence_residual, recurrence_sides, RecurrenceKind};
pub use series::{
    ali_gf_truncated, bounded_gf, even_odd_split_lhs, kursungoz_gf_truncated,
    schur_product_truncated,
};
pub use sides::{
    dual_oracle, dual_sides, lhs_schur, lhs_summand, qt_limit_sum, rhs_schur,
    summation_formula_sides, t0_binomial_identity, t0_limit_sides, warnaar_sides,
};
pub use verify::{
    verify, verify_with, Discrepancy, IdentityId, Params, Status, VerificationReport, VerifyOptions,
};
pub use weights::{weight_a, weight_b, weight_k, weight_q, ParityClass};
