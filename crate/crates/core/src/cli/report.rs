use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::schur_sums::VerificationReport;

/// Placeholder timestamp used by `--stable`.
pub const EPOCH: &str = "1970-01-01T00:00:00Z";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: u64,
    pub failed: u64,
}

/// The aggregated document written by `verify` and `report`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub started_at: String,
    pub entries: Vec<VerificationReport>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(started_at: String, entries: Vec<VerificationReport>) -> Self {
        let verified = entries.iter().filter(|e| e.verified()).count() as u64;
        let summary = Summary {
            verified,
            failed: entries.len() as u64 - verified,
        };
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            started_at,
            entries,
            summary,
        }
    }

    pub fn all_verified(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_text(&self) -> String {
        let params = |e: &VerificationReport| {
            e.params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let w_id = self
            .entries
            .iter()
            .map(|e| e.identity.name().len())
            .max()
            .unwrap_or(0)
            .max(8);
        let w_par = self
            .entries
            .iter()
            .map(|e| params(e).len())
            .max()
            .unwrap_or(0)
            .max(6);

        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<w_id$}  {:<w_par$}  {:<8}  {:>8}",
            "IDENTITY", "PARAMS", "STATUS", "MS"
        );
        for e in &self.entries {
            let status = if e.verified() { "verified" } else { "FAILED" };
            let _ = writeln!(
                out,
                "{:<w_id$}  {:<w_par$}  {status:<8}  {:>8}",
                e.identity.name(),
                params(e),
                e.elapsed_ms
            );
            if let Some(d) = &e.first_discrepancy {
                let x = d.x_degree.map_or("-".to_string(), |x| x.to_string());
                let _ = writeln!(
                    out,
                    "    first discrepancy: x-degree {x}, half-step exponent {}, lhs {}, rhs {}",
                    d.exponent_half_steps, d.lhs, d.rhs
                );
            }
        }
        let _ = writeln!(
            out,
            "{} verified, {} failed",
            self.summary.verified, self.summary.failed
        );
        out
    }
}
