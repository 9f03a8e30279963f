//! Identity registry and the exact comparison that produces reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bijection::certify;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_distinct_pm1_mod3, enumerate_schur, schur_gf_oracle};
use crate::qpoly::{HalfExp, QPoly, XSeries};
use crate::schur_sums::recurrence::{recurrence_sides, RecurrenceKind};
use crate::schur_sums::series::{
    ali_gf_truncated, bounded_gf, bounded_size_limit, even_odd_split_lhs, kursungoz_gf_truncated,
    schur_product_truncated,
};
use crate::schur_sums::sides::{
    dual_oracle, dual_sides, lhs_schur, q1_quad_sum, q1_triple_sum, qt_limit_sum, rhs_schur,
    summation_formula_sides, t0_binomial_identity, t0_limit_sides, warnaar_sides,
};
use crate::schur_sums::weights::{weight_a, weight_k, ParityClass};

macro_rules! identities {
    ($($variant:ident => $name:literal, $about:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $(#[doc = $about] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $about,)*
                }
            }
        }
    };
}

identities! {
    SchurPoly => "SCHUR_POLY", "polynomial identity L_N = R_N";
    Dual => "DUAL", "q -> 1/q dual identity, normalized by q^(N/2)";
    T0Binom => "T0_BINOM", "T_0 trinomial sum as a binomial sum";
    T0Limit => "T0_LIMIT", "T_0 trinomial sum against 1/((q^2;q^3)(q;q^6)) mod q^T";
    QtLimit => "QT_LIMIT", "Q_t triple series against 1/((q^2;q^3)(q;q^6)) mod q^T";
    SummationM => "SUMMATION_M", "summation over N against (-q,-q^2;q^3)_M";
    Warnaar => "WARNAAR", "Warnaar's T_0 summation";
    RecAndrews => "REC_ANDREWS", "three-term recurrence of R_N";
    RecL => "REC_L", "five-term recurrence of L_N";
    RecSummand => "REC_SUMMAND", "termwise recurrence of the summands of L_N";
    GfBounded => "GF_BOUNDED", "bounded generating function against enumeration";
    GfAliEqKursungoz => "GF_ALI_EQ_KURSUNGOZ", "the two triple series agree mod q^T";
    GfEvenOddSplit => "GF_EVEN_ODD_SPLIT", "even-odd split against the K-weighted series";
    AnalyticSchur => "ANALYTIC_SCHUR", "triple series at x = 1 against (-q,-q^2;q^3)_inf";
    Q1Triple => "Q1_TRIPLE", "q = 1 triple sum equals 3^M";
    Q1Quad => "Q1_QUAD", "q = 1 quadruple sum equals 4^M";
    ExponentDiff => "EXPONENT_DIFF", "A(2n1,2n2,m) - K(n1,n2,m) = 2m for all n1, n2, m <= N";
    SchurTheorem => "SCHUR_THEOREM", "partition counts of both classes and the product agree";
    GfBoundedSum => "GF_BOUNDED_SUM", "bounded series at 3N-1 summed over x equals L_N";
    Bijection => "BIJECTION", "exhaustive bijection sweep up to size max_n";
}

impl IdentityId {
    /// Parameter names the identity reads.
    pub fn param_keys(self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            SchurPoly | Dual | T0Binom | RecAndrews | RecL | RecSummand | GfBoundedSum
            | ExponentDiff => &["N"],
            T0Limit | GfBounded => &["N", "T"],
            QtLimit => &["t", "T"],
            SummationM | Q1Triple | Q1Quad => &["M"],
            Warnaar => &["L", "a"],
            GfAliEqKursungoz | GfEvenOddSplit | AnalyticSchur => &["T"],
            SchurTheorem | Bijection => &["max_n"],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts `SCHUR_POLY` as well as `schur-poly`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .iter()
            .copied()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::Usage(format!("unknown identity {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Named integer parameters, e.g. `{"N": 3}`.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub x_degree: Option<u32>,
    pub exponent_half_steps: HalfExp,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Params,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Adds 1 to the lowest coefficient of the first left side. Test hook.
    pub inject_fault: bool,
    /// Intermediate admissibility checks in the bijection sweep.
    pub strict: bool,
}

enum Comparison {
    Poly(QPoly, QPoly),
    Series(XSeries, XSeries),
}

impl Comparison {
    fn scalar(l: BigInt, r: BigInt) -> Self {
        Self::Poly(QPoly::constant(l), QPoly::constant(r))
    }

    fn counts(l: &[u64], r: &[u64]) -> Self {
        let poly = |v: &[u64]| {
            QPoly::from_terms(
                v.iter()
                    .enumerate()
                    .map(|(i, &c)| (2 * i as i64, BigInt::from(c))),
            )
        };
        Self::Poly(poly(l), poly(r))
    }

    fn perturb(&mut self) {
        let bump = |p: &mut QPoly| {
            let e = p.min_half_exp().unwrap_or(0);
            p.add_term(e, BigInt::from(1));
        };
        match self {
            Self::Poly(l, _) => bump(l),
            Self::Series(l, _) => {
                let x = l.strata().next().map(|(x, _)| x).unwrap_or(0);
                let mut s = l.stratum(x);
                bump(&mut s);
                let mut fixed = XSeries::new(l.truncation());
                for (k, p) in l.strata() {
                    if k != x {
                        fixed.add_term(k, p);
                    }
                }
                fixed.add_term(x, &s);
                *l = fixed;
            }
        }
    }

    fn first_discrepancy(&self) -> Option<Discrepancy> {
        match self {
            Self::Poly(l, r) => l.first_difference(r).map(|(e, a, b)| Discrepancy {
                x_degree: None,
                exponent_half_steps: e,
                lhs: a.to_string(),
                rhs: b.to_string(),
            }),
            Self::Series(l, r) => l.first_difference(r).map(|(x, e, a, b)| Discrepancy {
                x_degree: Some(x),
                exponent_half_steps: e,
                lhs: a.to_string(),
                rhs: b.to_string(),
            }),
        }
    }
}

fn param(params: &Params, key: &str) -> Result<i64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::Usage(format!("missing parameter {key}")))
}

fn param_or(params: &Params, key: &str, default: i64) -> i64 {
    params.get(key).copied().unwrap_or(default)
}

fn at_least(key: &str, v: i64, min: i64) -> Result<i64> {
    if v < min {
        return Err(Error::Usage(format!("{key} must be >= {min}, got {v}")));
    }
    Ok(v)
}

fn size_counts(buckets: &[Vec<crate::partitions::Partition>]) -> Vec<u64> {
    buckets.iter().map(|b| b.len() as u64).collect()
}

/// The comparisons that make up one identity instance, in reporting order.
fn comparisons(id: IdentityId, params: &Params, opts: VerifyOptions) -> Result<Vec<Comparison>> {
    use IdentityId::*;
    let c = |(l, r): (QPoly, QPoly)| Comparison::Poly(l, r);
    Ok(match id {
        SchurPoly => {
            let n = param(params, "N")?;
            vec![Comparison::Poly(lhs_schur(n), rhs_schur(n))]
        }
        Dual => {
            let n = at_least("N", param(params, "N")?, 0)?;
            let (l, r) = dual_sides(n);
            let oracle = dual_oracle(n);
            vec![Comparison::Poly(l.clone(), r), Comparison::Poly(l, oracle)]
        }
        T0Binom => vec![c(t0_binomial_identity(at_least(
            "N",
            param(params, "N")?,
            0,
        )?))],
        T0Limit => {
            let n = at_least("N", param(params, "N")?, 0)?;
            let t = at_least("T", param_or(params, "T", n), 0)?;
            if t > n {
                return Err(Error::Usage(format!(
                    "T0_LIMIT needs T <= N, got T={t} N={n}"
                )));
            }
            vec![c(t0_limit_sides(n, t))]
        }
        QtLimit => {
            let class = ParityClass::from_t(param(params, "t")?)?;
            let t = at_least("T", param(params, "T")?, 0)?;
            let rhs = crate::schur_sums::sides::t0_limit_rhs(t);
            vec![Comparison::Poly(qt_limit_sum(class, t), rhs)]
        }
        SummationM => vec![c(summation_formula_sides(at_least(
            "M",
            param(params, "M")?,
            0,
        )?))],
        Warnaar => {
            let l = at_least("L", param(params, "L")?, 0)?;
            vec![c(warnaar_sides(l, param(params, "a")?))]
        }
        RecAndrews | RecL => {
            let (kind, min) = if id == RecAndrews {
                (RecurrenceKind::Andrews, 2)
            } else {
                (RecurrenceKind::LeftSum, 4)
            };
            let n = at_least("N", param(params, "N")?, min)?;
            vec![c(recurrence_sides(kind, n, 0, 0, 0))]
        }
        RecSummand => {
            let n = at_least("N", param(params, "N")?, 4)?;
            let mut out = Vec::new();
            for m in 0..=n {
                for n1 in 0..=n - m {
                    for n2 in 0..=n - m - n1 {
                        out.push(c(recurrence_sides(RecurrenceKind::Summand, n, m, n1, n2)));
                    }
                }
            }
            out
        }
        GfBounded => {
            let n = at_least("N", param(params, "N")?, 0)?;
            let t = at_least("T", param_or(params, "T", 45), 0)?;
            vec![Comparison::Series(
                bounded_gf(n, t),
                schur_gf_oracle(t, Some(n as u32)),
            )]
        }
        GfBoundedSum => {
            let n = at_least("N", param(params, "N")?, 1)?;
            let bound = 3 * n - 1;
            let t = bounded_size_limit(bound);
            vec![Comparison::Poly(
                bounded_gf(bound, t).at_x_equals_one(),
                lhs_schur(n),
            )]
        }
        GfAliEqKursungoz => {
            let t = at_least("T", param(params, "T")?, 0)?;
            vec![Comparison::Series(
                ali_gf_truncated(t),
                kursungoz_gf_truncated(t),
            )]
        }
        GfEvenOddSplit => {
            let t = at_least("T", param(params, "T")?, 0)?;
            vec![Comparison::Series(
                even_odd_split_lhs(t),
                kursungoz_gf_truncated(t),
            )]
        }
        AnalyticSchur => {
            let t = at_least("T", param(params, "T")?, 0)?;
            vec![Comparison::Poly(
                ali_gf_truncated(t).at_x_equals_one(),
                schur_product_truncated(t),
            )]
        }
        Q1Triple => {
            let m = at_least("M", param(params, "M")?, 0)?;
            let want = BigInt::from(3).pow(m as u32);
            vec![
                Comparison::scalar(q1_triple_sum(m), want.clone()),
                Comparison::scalar(lhs_schur(m).eval_at_one(), want),
            ]
        }
        Q1Quad => {
            let m = at_least("M", param(params, "M")?, 0)?;
            let want = BigInt::from(4).pow(m as u32);
            vec![
                Comparison::scalar(q1_quad_sum(m), want.clone()),
                Comparison::scalar(summation_formula_sides(m).0.eval_at_one(), want),
            ]
        }
        ExponentDiff => {
            let n = at_least("N", param(params, "N")?, 0)?;
            let mut out = Vec::new();
            for n1 in 0..=n {
                for n2 in 0..=n {
                    for m in 0..=n {
                        let d = weight_a(2 * n1, 2 * n2, m) - weight_k(n1, n2, m);
                        out.push(Comparison::scalar(d.into(), (2 * m).into()));
                    }
                }
            }
            out
        }
        SchurTheorem => {
            let n = at_least("max_n", param(params, "max_n")?, 0)?;
            let gaps = size_counts(&enumerate_schur(n as u64, None));
            let distinct = size_counts(&enumerate_distinct_pm1_mod3(n as u64));
            let product = schur_product_truncated(n);
            let from_product: Vec<u64> = (0..=n)
                .map(|e| u64::try_from(product.coefficient(2 * e)).unwrap_or(u64::MAX))
                .collect();
            vec![
                Comparison::counts(&gaps, &distinct),
                Comparison::counts(&distinct, &from_product),
            ]
        }
        Bijection => {
            let n = at_least("max_n", param(params, "max_n")?, 0)?;
            let cert = certify(n as u64, opts.strict);
            let zero = vec![0u64];
            vec![
                Comparison::counts(&cert.roundtrips, &cert.admissible),
                Comparison::counts(&cert.encodings, &cert.admissible),
                Comparison::counts(&cert.distinct_images, &cert.admissible),
                Comparison::counts(&[cert.contract_violations], &zero),
                Comparison::counts(&[cert.no_rule_errors], &zero),
                Comparison::counts(&[cert.size_mismatches], &zero),
            ]
        }
    })
}

/// Builds both sides of `id` at `params` and compares them exactly.
pub fn verify(id: IdentityId, params: &Params) -> Result<VerificationReport> {
    verify_with(id, params, VerifyOptions::default())
}

pub fn verify_with(
    id: IdentityId,
    params: &Params,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut comps = comparisons(id, params, opts)?;
    if opts.inject_fault {
        if let Some(first) = comps.first_mut() {
            first.perturb();
        }
    }
    let first_discrepancy = comps.iter().find_map(Comparison::first_discrepancy);
    Ok(VerificationReport {
        identity: id,
        params: params.clone(),
        status: if first_discrepancy.is_some() {
            Status::Failed
        } else {
            Status::Verified
        },
        first_discrepancy,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Convenience for building parameter maps: `params(&[("N", 3)])`.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// The parameter sets of the full acceptance matrix, in report order.
pub fn acceptance_matrix() -> Vec<(IdentityId, Params)> {
    use IdentityId::*;
    let mut out = Vec::new();
    let mut push = |id, p: &[(&str, i64)]| out.push((id, params(p)));
    for n in 0..=25 {
        push(SchurPoly, &[("N", n)]);
    }
    for n in 2..=25 {
        push(RecAndrews, &[("N", n)]);
    }
    for n in 4..=25 {
        push(RecL, &[("N", n)]);
    }
    for n in 4..=12 {
        push(RecSummand, &[("N", n)]);
    }
    push(SchurTheorem, &[("max_n", 60)]);
    for n in 0..=15 {
        push(GfBounded, &[("N", n), ("T", 45)]);
    }
    for n in 1..=10 {
        push(GfBoundedSum, &[("N", n)]);
    }
    push(GfAliEqKursungoz, &[("T", 60)]);
    push(GfEvenOddSplit, &[("T", 60)]);
    push(AnalyticSchur, &[("T", 60)]);
    for n in 0..=20 {
        push(Dual, &[("N", n)]);
    }
    for n in 0..=20 {
        push(T0Binom, &[("N", n)]);
    }
    push(T0Limit, &[("N", 40), ("T", 40)]);
    for t in 1..=2 {
        push(QtLimit, &[("t", t), ("T", 50)]);
    }
    for m in 0..=12 {
        push(SummationM, &[("M", m)]);
    }
    for l in 0..=12 {
        for a in -l..=l {
            push(Warnaar, &[("L", l), ("a", a)]);
        }
    }
    for m in 0..=15 {
        push(Q1Triple, &[("M", m)]);
    }
    for m in 0..=15 {
        push(Q1Quad, &[("M", m)]);
    }
    push(Bijection, &[("max_n", 40)]);
    push(ExponentDiff, &[("N", 20)]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(
            "schur-poly".parse::<IdentityId>().unwrap(),
            IdentityId::SchurPoly
        );
        assert!("nope".parse::<IdentityId>().is_err());
        assert_eq!(IdentityId::ALL.len(), 20);
    }

    #[test]
    fn verify_examples() {
        let r = verify(IdentityId::SchurPoly, &params(&[("N", 3)])).unwrap();
        assert!(r.verified());
        let r = verify(IdentityId::Q1Triple, &params(&[("M", 2)])).unwrap();
        assert!(r.verified());
        let r = verify(IdentityId::SchurPoly, &params(&[("N", -2)])).unwrap();
        assert!(r.verified());
    }

    #[test]
    fn usage_errors_are_not_failures() {
        assert!(matches!(
            verify(IdentityId::SchurPoly, &Params::new()),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            verify(IdentityId::QtLimit, &params(&[("t", 3), ("T", 5)])),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            verify(IdentityId::T0Limit, &params(&[("N", 3), ("T", 5)])),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn injected_fault_is_reported() {
        let opts = VerifyOptions {
            inject_fault: true,
            strict: false,
        };
        let r = verify_with(IdentityId::SchurPoly, &params(&[("N", 2)]), opts).unwrap();
        assert_eq!(r.status, Status::Failed);
        let d = r.first_discrepancy.unwrap();
        assert_eq!((d.x_degree, d.exponent_half_steps), (None, 0));
        assert_eq!((d.lhs.as_str(), d.rhs.as_str()), ("2", "1"));

        let r = verify_with(IdentityId::GfAliEqKursungoz, &params(&[("T", 4)]), opts).unwrap();
        assert_eq!(r.first_discrepancy.unwrap().x_degree, Some(0));
    }

    #[test]
    fn report_json_shape() {
        let mut r = verify(IdentityId::SchurPoly, &params(&[("N", 1)])).unwrap();
        r.elapsed_ms = 0;
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"identity":"SCHUR_POLY","params":{"N":1},"status":"verified","first_discrepancy":null,"elapsed_ms":0}"#
        );
    }
}
