//! Exact computation and verification of a polynomial identity behind
//! Schur's 1926 partition theorem, its generating functions, and the
//! bijection between motion data and Schur partitions.
//!
//! ```
//! use qschur::schur_sums::{lhs_schur, rhs_schur};
//!
//! let l = lhs_schur(2);
//! assert_eq!(l, rhs_schur(2));
//! assert_eq!(l.to_string(), "1 + q + q^2 + q^3 + q^4 + 2 q^5 + q^6 + q^7");
//! ```

pub mod bijection;
pub mod cli;
pub mod error;
pub mod partitions;
pub mod qcoeff;
pub mod qpoly;
pub mod schur_sums;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use qpoly::{HalfExp, QPoly, SeriesOp, XSeries};
pub use schur_sums::{IdentityId, Params, VerificationReport};
