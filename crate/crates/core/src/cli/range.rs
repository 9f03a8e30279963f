use std::fmt;
use std::str::FromStr;

/// Inclusive integer range written `a..b`, `a..=b`, or a single `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn values(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// Largest absolute value in the range.
    pub fn magnitude(self) -> i64 {
        self.lo.abs().max(self.hi.abs())
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("malformed range {s:?}: expected a..b"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("0..25".parse(), Ok(IntRange { lo: 0, hi: 25 }));
        assert_eq!("-3..=3".parse(), Ok(IntRange { lo: -3, hi: 3 }));
        assert_eq!("7".parse(), Ok(IntRange::single(7)));
        assert_eq!("-2..-1".parse::<IntRange>().unwrap().values().count(), 2);
        assert!("5..2".parse::<IntRange>().is_err());
        assert!("a..b".parse::<IntRange>().is_err());
        assert!("1...3".parse::<IntRange>().is_err());
    }
}
