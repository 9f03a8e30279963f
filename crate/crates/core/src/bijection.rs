//! Minimal configurations, forward motions, and the inverse map.
//!
//! A Schur partition is built from a minimal configuration `(n1, n2, m)`: a
//! chain `1, 4, ..., 3n1-2`, a chain `3n1+2, ..., 3(n1+n2)-1` and `m`
//! singletons `3(n1+n2)+3+4i`. Singletons move individually. The top
//! `2*floor(n/2)` parts of each chain split off as pairs `(x, x+3)`, and each
//! pair step adds 6 to the size.
//!
//! One pair step crosses the smallest number `c` of parts above the pair for
//! which the result is admissible: the crossed parts drop by 6 and the pair
//! rises by `3(c+1)`. For `c <= 3` the local pictures are the familiar ones
//! (free motion, one, two or three close singletons, a 2 mod 3 chain); past
//! that the step is labelled [`MotionRule::Extended`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_schur, is_schur_admissible_slice, Partition};
use crate::schur_sums::weights::{minimal_largest_part, weight_a};

type Logged = Result<(DecoratedPartition, Vec<StepLog>)>;

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct MinimalConfig {
    pub n1: u32,
    pub n2: u32,
    pub m: u32,
}

impl MinimalConfig {
    pub fn new(n1: u32, n2: u32, m: u32) -> Self {
        Self { n1, n2, m }
    }

    pub fn size(&self) -> i64 {
        weight_a(self.n1 as i64, self.n2 as i64, self.m as i64)
    }

    pub fn largest_part(&self) -> i64 {
        minimal_largest_part(self.n1 as i64, self.n2 as i64, self.m as i64)
    }

    /// Number of parts.
    pub fn len(&self) -> u32 {
        self.n1 + self.n2 + self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn pairs1(&self) -> u32 {
        self.n1 / 2
    }

    fn pairs2(&self) -> u32 {
        self.n2 / 2
    }

    fn first_singleton(&self) -> u32 {
        3 * (self.n1 + self.n2) + 3
    }
}

/// Motion amounts, each list smallest mover first and weakly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MotionData {
    /// One entry per singleton.
    pub r: Vec<u32>,
    /// Step counts of the 2 mod 3 pairs.
    pub rho2: Vec<u32>,
    /// Step counts of the 1 mod 3 pairs.
    pub rho1: Vec<u32>,
}

impl MotionData {
    pub fn zero(c: MinimalConfig) -> Self {
        Self {
            r: vec![0; c.m as usize],
            rho2: vec![0; c.pairs2() as usize],
            rho1: vec![0; c.pairs1() as usize],
        }
    }

    /// Size added on top of the minimal configuration.
    pub fn added_size(&self) -> u64 {
        let sum = |v: &[u32]| v.iter().map(|&x| x as u64).sum::<u64>();
        sum(&self.r) + 6 * sum(&self.rho2) + 6 * sum(&self.rho1)
    }

    fn validate(&self, c: MinimalConfig) -> Result<()> {
        let check = |name: &str, v: &[u32], len: u32| -> Result<()> {
            if v.len() != len as usize {
                return Err(Error::InvalidMotion(format!(
                    "{name} has {} entries, expected {len}",
                    v.len()
                )));
            }
            if v.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidMotion(format!(
                    "{name} is not weakly increasing"
                )));
            }
            Ok(())
        };
        check("r", &self.r, c.m)?;
        check("rho2", &self.rho2, c.pairs2())?;
        check("rho1", &self.rho1, c.pairs1())
    }
}

/// A configuration together with its motions; serializes as
/// `{n1, n2, m, r, rho2, rho1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Encoding {
    #[serde(flatten)]
    pub config: MinimalConfig,
    #[serde(flatten)]
    pub motions: MotionData,
}

impl Encoding {
    pub fn size(&self) -> u64 {
        self.config.size() as u64 + self.motions.added_size()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartLabel {
    /// Unpaired bottom element of the 1 mod 3 chain.
    Chain1,
    /// Unpaired bottom element of the 2 mod 3 chain.
    Chain2,
    /// Member of a 1 mod 3 pair, pairs numbered from the bottom.
    Pair1(u32),
    Pair2(u32),
    Singleton(u32),
}

impl fmt::Display for PartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Chain1 => write!(f, "c1"),
            Self::Chain2 => write!(f, "c2"),
            Self::Pair1(j) => write!(f, "p1.{j}"),
            Self::Pair2(j) => write!(f, "p2.{j}"),
            Self::Singleton(i) => write!(f, "s{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedPartition {
    pub parts: Vec<u32>,
    pub labels: Vec<PartLabel>,
}

impl DecoratedPartition {
    pub fn partition(&self) -> Partition {
        Partition::new(self.parts.clone()).expect("decorated parts are increasing")
    }

    pub fn is_admissible(&self) -> bool {
        is_schur_admissible_slice(&self.parts)
    }

    fn find(&self, label: PartLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

impl fmt::Display for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, l)) in self.parts.iter().zip(&self.labels).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}[{l}]")?;
        }
        Ok(())
    }
}

/// Which local picture a pair step realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MotionRule {
    /// Nothing within reach above the pair.
    Free,
    /// Crossing one singleton at offset 6..=8 from the lower pair part.
    OneSingleton,
    /// Two close singletons at offsets `6+r`, `10+s`, `s - r <= 1`.
    TwoSingletons,
    /// Three close singletons at offsets `6+r`, `10+s`, `14+t` with
    /// `r, s, t` in `{0, 1}` and each step up by at most 1.
    ThreeSingletons,
    /// A 1 mod 3 pair crossing a 2 mod 3 chain of the given length.
    Chain { length: u32 },
    /// Any other crossing, e.g. a chain followed by singletons.
    Extended { crossed: u32 },
}

impl MotionRule {
    pub fn crossed(self) -> u32 {
        match self {
            Self::Free => 0,
            Self::OneSingleton => 1,
            Self::TwoSingletons => 2,
            Self::ThreeSingletons => 3,
            Self::Chain { length } => length,
            Self::Extended { crossed } => crossed,
        }
    }

    /// Classifies a step by the crossed parts' offsets above the lower pair part.
    fn classify(residue: u32, offsets: &[u32]) -> Self {
        let c = offsets.len() as u32;
        let rel = |k: usize, base: u32| offsets[k].checked_sub(base);
        let within = |v: Option<u32>, hi: u32| v.filter(|&x| x <= hi);
        match c {
            0 => return Self::Free,
            1 if within(rel(0, 6), 2).is_some() => return Self::OneSingleton,
            2 => {
                if let (Some(r), Some(s)) = (within(rel(0, 6), 2), within(rel(1, 10), 2)) {
                    if s <= r + 1 {
                        return Self::TwoSingletons;
                    }
                }
            }
            3 => {
                if let (Some(r), Some(s), Some(t)) = (
                    within(rel(0, 6), 1),
                    within(rel(1, 10), 1),
                    within(rel(2, 14), 1),
                ) {
                    if s <= r + 1 && t <= s + 1 {
                        return Self::ThreeSingletons;
                    }
                }
            }
            _ => {}
        }
        if residue == 1
            && c >= 3
            && offsets
                .iter()
                .enumerate()
                .all(|(k, &z)| z == 7 + 3 * k as u32)
        {
            return Self::Chain { length: c };
        }
        Self::Extended { crossed: c }
    }

    /// True for the pictures with a dedicated rule (everything but `Extended`).
    pub fn is_listed(self) -> bool {
        !matches!(self, Self::Extended { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairFamily {
    OneModThree,
    TwoModThree,
}

/// One logged pair step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepLog {
    pub family: PairFamily,
    pub pair: u32,
    pub rule: MotionRule,
    pub larger_before: u32,
    pub larger_after: u32,
    pub size_before: u64,
    pub size_after: u64,
}

impl StepLog {
    /// Size grows by 6 and the larger pair part advances by `3(1 + crossed)`.
    pub fn contracts_hold(&self) -> bool {
        self.size_after == self.size_before + 6
            && self.larger_after == self.larger_before + 3 * (1 + self.rule.crossed())
    }
}

/// The minimal configuration with the chain tops already grouped into pairs.
pub fn minimal_configuration(c: MinimalConfig) -> DecoratedPartition {
    let mut parts = Vec::with_capacity(c.len() as usize);
    let mut labels = Vec::with_capacity(c.len() as usize);
    for i in 0..c.n1 {
        parts.push(3 * i + 1);
        let lone = c.n1 % 2;
        labels.push(if i < lone {
            PartLabel::Chain1
        } else {
            PartLabel::Pair1((i - lone) / 2)
        });
    }
    for i in 0..c.n2 {
        parts.push(3 * c.n1 + 2 + 3 * i);
        let lone = c.n2 % 2;
        labels.push(if i < lone {
            PartLabel::Chain2
        } else {
            PartLabel::Pair2((i - lone) / 2)
        });
    }
    for i in 0..c.m {
        parts.push(c.first_singleton() + 4 * i);
        labels.push(PartLabel::Singleton(i));
    }
    DecoratedPartition { parts, labels }
}

/// Parts after one forward step of the pair whose lower part sits at `i`,
/// with the crossing count; `None` when no crossing count is admissible.
fn forward_step_parts(parts: &[u32], i: usize) -> Option<(Vec<u32>, usize)> {
    let (x, y) = (parts[i], parts[i + 1]);
    let above = &parts[i + 2..];
    for c in 0..=above.len() {
        let crossed_ok = above[..c].iter().all(|&z| z > 6);
        if !crossed_ok {
            continue;
        }
        let shift = 3 * (c as u32 + 1);
        let mut next = Vec::with_capacity(parts.len());
        next.extend_from_slice(&parts[..i]);
        next.extend(above[..c].iter().map(|&z| z - 6));
        next.push(x + shift);
        next.push(y + shift);
        next.extend_from_slice(&above[c..]);
        if next.windows(2).all(|w| w[0] < w[1]) && is_schur_admissible_slice(&next) {
            return Some((next, c));
        }
    }
    None
}

fn step(state: &mut DecoratedPartition, i: usize) -> Result<(usize, usize)> {
    let (next, c) = forward_step_parts(&state.parts, i)
        .ok_or_else(|| Error::NoRuleApplies(format!("pair at position {i} of {}", state)))?;
    let pair = [state.labels[i], state.labels[i + 1]];
    state.labels.copy_within(i + 2..i + 2 + c, i);
    state.labels[i + c] = pair[0];
    state.labels[i + c + 1] = pair[1];
    state.parts = next;
    Ok((i + c, c))
}

/// Runs every motion in the fixed order: singletons, then 2 mod 3 pairs
/// top pair first, then 1 mod 3 pairs top pair first.
fn run(
    c: MinimalConfig,
    d: &MotionData,
    strict: bool,
    mut log: Option<&mut Vec<StepLog>>,
) -> Result<DecoratedPartition> {
    d.validate(c)?;
    let mut state = minimal_configuration(c);
    let first = (c.n1 + c.n2) as usize;
    for (k, &r) in d.r.iter().enumerate() {
        state.parts[first + k] += r;
    }
    let check = |s: &DecoratedPartition| -> Result<()> {
        if strict && !s.is_admissible() {
            return Err(Error::NotAdmissible(s.partition().to_string()));
        }
        Ok(())
    };
    check(&state)?;
    let families = [
        (
            PairFamily::TwoModThree,
            &d.rho2,
            PartLabel::Pair2 as fn(u32) -> PartLabel,
        ),
        (
            PairFamily::OneModThree,
            &d.rho1,
            PartLabel::Pair1 as fn(u32) -> PartLabel,
        ),
    ];
    for (family, rhos, label) in families {
        let residue = match family {
            PairFamily::OneModThree => 1,
            PairFamily::TwoModThree => 2,
        };
        for j in (0..rhos.len()).rev() {
            let mut i = state.find(label(j as u32)).expect("pair label present");
            for _ in 0..rhos[j] {
                let before = state.parts.clone();
                let (ni, crossed) = step(&mut state, i)?;
                check(&state)?;
                if let Some(log) = log.as_deref_mut() {
                    let offsets: Vec<u32> = before[i + 2..i + 2 + crossed]
                        .iter()
                        .map(|&z| z - before[i])
                        .collect();
                    let size = |p: &[u32]| p.iter().map(|&v| v as u64).sum::<u64>();
                    log.push(StepLog {
                        family,
                        pair: j as u32,
                        rule: MotionRule::classify(residue, &offsets),
                        larger_before: before[i + 1],
                        larger_after: state.parts[ni + 1],
                        size_before: size(&before),
                        size_after: size(&state.parts),
                    });
                }
                i = ni;
            }
        }
    }
    Ok(state)
}

/// Forward map from a configuration and its motions to a Schur partition.
pub fn apply_motions(c: MinimalConfig, d: &MotionData) -> Result<Partition> {
    run(c, d, false, None).map(|s| s.partition())
}

/// [`apply_motions`] checking admissibility of every intermediate state.
pub fn apply_motions_strict(c: MinimalConfig, d: &MotionData) -> Result<Partition> {
    run(c, d, true, None).map(|s| s.partition())
}

/// [`apply_motions`] returning the labelled result and a log of every pair step.
pub fn apply_motions_logged(c: MinimalConfig, d: &MotionData, strict: bool) -> Logged {
    let mut log = Vec::new();
    let state = run(c, d, strict, Some(&mut log))?;
    Ok((state, log))
}

/// One backward step: the largest crossing count `c` whose predecessor stays
/// at or above `origin`, is admissible, and steps forward to `parts`.
fn backward_step(parts: &[u32], i: usize, origin: u32) -> Option<(Vec<u32>, usize)> {
    let (x, y) = (parts[i], parts[i + 1]);
    (0..=i).rev().find_map(|c| {
        let back = 3 * (c as u32 + 1);
        if x < origin + back {
            return None;
        }
        let mut pre = Vec::with_capacity(parts.len());
        pre.extend_from_slice(&parts[..i - c]);
        pre.push(x - back);
        pre.push(y - back);
        pre.extend(parts[i - c..i].iter().map(|&u| u + 6));
        pre.extend_from_slice(&parts[i + 2..]);
        if pre[0] < 1 || !pre.windows(2).all(|w| w[0] < w[1]) || !is_schur_admissible_slice(&pre) {
            return None;
        }
        match forward_step_parts(&pre, i - c) {
            Some((fwd, fc)) if fwd == parts && fc == c => Some((pre, i - c)),
            _ => None,
        }
    })
}

/// Rewinds `count` pairs of one residue, bottom pair first. Pair `j` started
/// with lower part `origin + 6j`. Returns the rewound parts and step counts.
fn rewind_pairs(
    mut parts: Vec<u32>,
    mut from: usize,
    origin: u32,
    count: u32,
    residue: u32,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut rhos = Vec::with_capacity(count as usize);
    for j in 0..count {
        let org = origin + 6 * j;
        let mut i = (from..parts.len().saturating_sub(1))
            .find(|&k| parts[k] % 3 == residue && parts[k + 1] == parts[k] + 3)?;
        let mut steps = 0;
        while parts[i] > org {
            let (pre, ni) = backward_step(&parts, i, org)?;
            parts = pre;
            i = ni;
            steps += 1;
        }
        if parts[i] != org {
            return None;
        }
        rhos.push(steps);
        from = i + 2;
    }
    Some((parts, rhos))
}

fn is_sorted(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn decode_as(parts: &[u32], c: MinimalConfig) -> Option<Encoding> {
    let (n1, n2) = (c.n1, c.n2);
    let (q, rho1) = rewind_pairs(
        parts.to_vec(),
        (n1 % 2) as usize,
        1 + 3 * (n1 % 2),
        c.pairs1(),
        1,
    )?;
    if (0..n1).any(|i| q[i as usize] != 3 * i + 1) {
        return None;
    }
    let (q, rho2) = rewind_pairs(
        q,
        (n1 + n2 % 2) as usize,
        3 * n1 + 2 + 3 * (n2 % 2),
        c.pairs2(),
        2,
    )?;
    if (0..n2).any(|i| q[(n1 + i) as usize] != 3 * n1 + 2 + 3 * i) {
        return None;
    }
    let s = (n1 + n2) as usize;
    let r = (0..c.m)
        .map(|i| q[s + i as usize].checked_sub(c.first_singleton() + 4 * i))
        .collect::<Option<Vec<u32>>>()?;
    if !is_sorted(&r) || !is_sorted(&rho1) || !is_sorted(&rho2) {
        return None;
    }
    Some(Encoding {
        config: c,
        motions: MotionData { r, rho2, rho1 },
    })
}

/// Inverse of [`apply_motions`].
pub fn decode(p: &Partition) -> Result<Encoding> {
    if !is_schur_admissible_slice(p.parts()) {
        return Err(Error::NotAdmissible(p.to_string()));
    }
    let nu = p.len() as u32;
    let mut found = Vec::new();
    for n1 in 0..=nu {
        for n2 in 0..=nu - n1 {
            let c = MinimalConfig::new(n1, n2, nu - n1 - n2);
            if let Some(e) = decode_as(p.parts(), c) {
                if apply_motions(e.config, &e.motions).ok().as_ref() == Some(p) {
                    found.push(e);
                }
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one candidate")),
        0 => Err(Error::DecodeFailed(p.to_string())),
        k => Err(Error::DecodeFailed(format!("{p}: {k} preimages"))),
    }
}

/// Largest per-mover motion amounts keeping every part `<= bound`;
/// `None` for a family without movers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotionCaps {
    pub r: Option<u32>,
    pub rho2: Option<u32>,
    pub rho1: Option<u32>,
}

pub fn max_motions(c: MinimalConfig, bound: i64) -> Result<MotionCaps> {
    let largest = c.largest_part();
    if largest > bound {
        return Err(Error::BoundExceeded { largest, bound });
    }
    let (n1, n2, m) = (c.n1 as i64, c.n2 as i64, c.m as i64);
    let s = n1 + n2;
    let cap = |present: bool, v: i64| present.then(|| v.max(0) as u32);
    Ok(MotionCaps {
        r: cap(m > 0, bound - (3 * s + 3 + 4 * (m - 1))),
        rho2: cap(c.pairs2() > 0, (bound - 3 * s + 1).div_euclid(3) - m),
        rho1: cap(c.pairs1() > 0, (bound - 3 * n1 + 2).div_euclid(3) - m - n2),
    })
}

/// Weakly increasing lists of `len` values in `0..=cap` with `weight * sum <= budget`.
pub fn weakly_increasing(len: usize, budget: u64, weight: u64, cap: Option<u32>) -> Vec<Vec<u32>> {
    fn rec(
        out: &mut Vec<Vec<u32>>,
        cur: &mut Vec<u32>,
        len: usize,
        lo: u32,
        budget: u64,
        weight: u64,
        cap: u32,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let left = (len - cur.len()) as u64;
        let mut v = lo;
        while v <= cap && v as u64 * weight * left <= budget {
            cur.push(v);
            rec(out, cur, len, v, budget - v as u64 * weight, weight, cap);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(
        &mut out,
        &mut Vec::new(),
        len,
        0,
        budget,
        weight,
        cap.unwrap_or(u32::MAX),
    );
    out
}

/// Every configuration with its motions of total size `<= max_size`, with
/// per-mover amounts limited by `caps` when given.
fn encodings_with(
    max_size: u64,
    caps: impl Fn(MinimalConfig) -> Option<MotionCaps>,
) -> Vec<Encoding> {
    let mut out = Vec::new();
    for m in 0u32.. {
        if weight_a(0, 0, m as i64) as u64 > max_size {
            break;
        }
        for n2 in 0u32.. {
            if weight_a(0, n2 as i64, m as i64) as u64 > max_size {
                break;
            }
            for n1 in 0u32.. {
                let c = MinimalConfig::new(n1, n2, m);
                let a = c.size() as u64;
                if a > max_size {
                    break;
                }
                let Some(cap) = caps(c) else { continue };
                let budget = max_size - a;
                for r in weakly_increasing(m as usize, budget, 1, cap.r) {
                    let b1 = budget - r.iter().map(|&v| v as u64).sum::<u64>();
                    for rho2 in weakly_increasing(c.pairs2() as usize, b1, 6, cap.rho2) {
                        let b2 = b1 - 6 * rho2.iter().map(|&v| v as u64).sum::<u64>();
                        for rho1 in weakly_increasing(c.pairs1() as usize, b2, 6, cap.rho1) {
                            out.push(Encoding {
                                config: c,
                                motions: MotionData {
                                    r: r.clone(),
                                    rho2: rho2.clone(),
                                    rho1,
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// All encodings of total size `<= max_size`.
pub fn encodings_up_to(max_size: u64) -> Vec<Encoding> {
    let free = MotionCaps {
        r: None,
        rho2: None,
        rho1: None,
    };
    encodings_with(max_size, |_| Some(free))
}

/// Encodings of size `<= max_size` whose motions stay within the caps for `bound`.
pub fn bounded_encodings(bound: i64, max_size: u64) -> Vec<Encoding> {
    encodings_with(max_size, |c| max_motions(c, bound).ok())
}

/// Outcome of an exhaustive sweep over all sizes `<= max_size`. The per-size
/// vectors are indexed by size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub max_size: u64,
    /// Admissible partitions of each size.
    pub admissible: Vec<u64>,
    /// Admissible partitions whose decode re-encodes to themselves.
    pub roundtrips: Vec<u64>,
    /// Encodings of each size.
    pub encodings: Vec<u64>,
    /// Distinct admissible images of the encodings of each size.
    pub distinct_images: Vec<u64>,
    /// Logged steps breaking the size or displacement contract.
    pub contract_violations: u64,
    /// Encodings where no crossing count was admissible.
    pub no_rule_errors: u64,
    /// Encodings whose result had a size other than the predicted one.
    pub size_mismatches: u64,
    /// Step counts per rule.
    pub rule_counts: BTreeMap<String, u64>,
    /// First failures, verbatim, for diagnosis.
    pub examples: Vec<String>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.admissible == self.roundtrips
            && self.admissible == self.encodings
            && self.admissible == self.distinct_images
            && self.contract_violations == 0
            && self.no_rule_errors == 0
            && self.size_mismatches == 0
    }

    /// Steps that needed a rule beyond the listed pictures.
    pub fn extended_steps(&self) -> u64 {
        self.rule_counts
            .iter()
            .filter(|(k, _)| k.starts_with("Extended"))
            .map(|(_, v)| v)
            .sum()
    }
}

/// Exhaustive check of the bijection on every size `<= max_size`.
pub fn certify(max_size: u64, strict: bool) -> Certificate {
    let len = max_size as usize + 1;
    let mut cert = Certificate {
        max_size,
        admissible: vec![0; len],
        roundtrips: vec![0; len],
        encodings: vec![0; len],
        distinct_images: vec![0; len],
        ..Default::default()
    };

    let all: Vec<Partition> = enumerate_schur(max_size, None)
        .into_iter()
        .flatten()
        .collect();
    let roundtrip: Vec<(usize, bool, Option<String>)> = all
        .par_iter()
        .map(|p| {
            let ok = decode(p)
                .and_then(|e| apply_motions_strict(e.config, &e.motions))
                .map(|back| &back == p);
            let note = match &ok {
                Ok(true) => None,
                Ok(false) => Some(format!("roundtrip changed ({p})")),
                Err(e) => Some(e.to_string()),
            };
            (p.size() as usize, matches!(ok, Ok(true)), note)
        })
        .collect();
    for (size, ok, note) in roundtrip {
        cert.admissible[size] += 1;
        cert.roundtrips[size] += ok as u64;
        if let Some(n) = note {
            if cert.examples.len() < 10 {
                cert.examples.push(n);
            }
        }
    }

    let encs = encodings_up_to(max_size);
    let results: Vec<(Encoding, Logged)> = encs
        .into_par_iter()
        .map(|e| {
            let r = apply_motions_logged(e.config, &e.motions, strict);
            (e, r)
        })
        .collect();
    let mut images: HashMap<Vec<u32>, u32> = HashMap::new();
    for (e, r) in results {
        let size = e.size() as usize;
        cert.encodings[size] += 1;
        match r {
            Err(err) => {
                cert.no_rule_errors += matches!(err, Error::NoRuleApplies(_)) as u64;
                if cert.examples.len() < 10 {
                    cert.examples.push(format!(
                        "{}: {err}",
                        serde_json::to_string(&e).unwrap_or_default()
                    ));
                }
            }
            Ok((state, log)) => {
                let got: u64 = state.parts.iter().map(|&v| v as u64).sum();
                if got as usize != size {
                    cert.size_mismatches += 1;
                }
                for s in &log {
                    cert.contract_violations += (!s.contracts_hold()) as u64;
                    let key = match s.rule {
                        MotionRule::Chain { .. } => "Chain".to_string(),
                        MotionRule::Extended { crossed } => format!("Extended({crossed})"),
                        other => format!("{other:?}"),
                    };
                    *cert.rule_counts.entry(key).or_default() += 1;
                }
                if state.is_admissible() && got as usize == size {
                    let seen = images.entry(state.parts).or_default();
                    *seen += 1;
                    if *seen == 1 {
                        cert.distinct_images[size] += 1;
                    }
                }
            }
        }
    }
    cert
}
