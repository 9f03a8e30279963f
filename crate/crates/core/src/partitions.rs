//! Brute-force enumeration of the two partition classes in Schur's theorem.
//!
//! Nothing here depends on the sum formulas; these are the independent oracles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qpoly::XSeries;

/// Non-decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedPartition(
                "parts must be non-decreasing".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.last().copied()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::MalformedPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// May `next` directly follow `prev` in a Schur partition?
#[inline]
pub fn schur_gap_ok(prev: u32, next: u32) -> bool {
    let need = if prev.is_multiple_of(3) && next.is_multiple_of(3) {
        6
    } else {
        3
    };
    next >= prev + need
}

/// Consecutive parts differ by at least 3, and by at least 6 when both are
/// multiples of 3.
pub fn is_schur_admissible(p: &Partition) -> bool {
    is_schur_admissible_slice(p.parts())
}

pub fn is_schur_admissible_slice(parts: &[u32]) -> bool {
    parts.iter().all(|&x| x >= 1) && parts.windows(2).all(|w| schur_gap_ok(w[0], w[1]))
}

/// Partitions grouped by size: entry `n` lists the partitions of `n`.
pub type BySize = Vec<Vec<Partition>>;

fn dfs<F>(n_max: u64, first: u32, allowed: &F, out: &mut BySize, stack: &mut Vec<u32>, size: u64)
where
    F: Fn(Option<u32>, u32) -> bool,
{
    out[size as usize].push(Partition {
        parts: stack.clone(),
    });
    let mut next = first;
    while size + next as u64 <= n_max {
        if allowed(stack.last().copied(), next) {
            stack.push(next);
            dfs(n_max, next + 1, allowed, out, stack, size + next as u64);
            stack.pop();
        }
        next += 1;
    }
}

fn enumerate<F>(n_max: u64, allowed: F) -> BySize
where
    F: Fn(Option<u32>, u32) -> bool,
{
    let mut out = vec![Vec::new(); n_max as usize + 1];
    dfs(n_max, 1, &allowed, &mut out, &mut Vec::new(), 0);
    for bucket in &mut out {
        bucket.sort();
    }
    out
}

/// All Schur-admissible partitions of every size up to `n_max`, optionally
/// with every part `<= largest_part`. Each bucket is in lexicographic order.
pub fn enumerate_schur(n_max: u64, largest_part: Option<u32>) -> BySize {
    enumerate(n_max, |prev, next| {
        largest_part.is_none_or(|b| next <= b) && prev.is_none_or(|p| schur_gap_ok(p, next))
    })
}

/// All partitions into distinct parts congruent to 1 or 2 mod 3.
pub fn enumerate_distinct_pm1_mod3(n_max: u64) -> BySize {
    enumerate(n_max, |_, next| next % 3 != 0)
}

/// `sum x^(#parts) q^|p|` over Schur partitions, exponents `<= t`.
pub fn schur_gf_oracle(t: i64, largest_part: Option<u32>) -> XSeries {
    let mut out = XSeries::new(t);
    if t < 0 {
        return out;
    }
    for (size, bucket) in enumerate_schur(t as u64, largest_part).iter().enumerate() {
        for p in bucket {
            out.add_monomial(p.len() as u32, 2 * size as i64, BigInt::from(1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_schur_admissible(&part("1,4,8,12")));
        assert!(!is_schur_admissible(&part("3,6")));
        assert!(is_schur_admissible(&Partition::empty()));
        assert!(is_schur_admissible(&part("3,7")));
        assert!(is_schur_admissible(&part("3,9")));
        assert!(!is_schur_admissible(&part("1,3")));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(part("1, 4,8").to_string(), "1,4,8");
        assert_eq!(part("").to_string(), "");
        assert!("4,1".parse::<Partition>().is_err());
        assert!("0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let e = enumerate_schur(9, None);
        assert_eq!(e[0], vec![Partition::empty()]);
        assert_eq!(e[4], vec![part("4")]);
        assert_eq!(e[9], vec![part("1,8"), part("2,7"), part("9")]);
        let b = enumerate_schur(2, Some(1));
        assert_eq!(b[1], vec![part("1")]);
        assert!(b[2].is_empty());

        let d = enumerate_distinct_pm1_mod3(9);
        assert_eq!(d[0], vec![Partition::empty()]);
        assert_eq!(d[3], vec![part("1,2")]);
        assert_eq!(d[9], vec![part("1,8"), part("2,7"), part("4,5")]);
    }

    #[test]
    fn oracle_examples() {
        let g = schur_gf_oracle(2, None);
        assert_eq!(g.stratum(0), crate::QPoly::one());
        assert_eq!(g.stratum(1), crate::QPoly::from_coeffs(&[0, 1, 1]));
        let g = schur_gf_oracle(6, None);
        assert_eq!(
            g.stratum(2),
            crate::QPoly::from_coeffs(&[0, 0, 0, 0, 0, 1, 1])
        );
        let g = schur_gf_oracle(0, None);
        assert_eq!(g.strata().count(), 1);
    }

    #[test]
    fn bounded_is_subset() {
        let all = enumerate_schur(25, None);
        let bounded = enumerate_schur(25, Some(7));
        for (a, b) in all.iter().zip(&bounded) {
            for p in b {
                assert!(a.contains(p));
                assert!(is_schur_admissible(p));
            }
        }
    }
}
