//! Integer sequences, finite differences, order relations, corners and the
//! standard conjugate.
//!
//! Sequences are 1-indexed in every public accessor. Reads outside `1..=n`
//! (including index 0) return 0; nothing is ever physically padded.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wide type for prefix sums and inequality sides.
pub type Sum = i128;

/// Largest entry magnitude accepted from callers. With `r` capped at
/// [`MAX_MULTIPLICITY`], every bound of the form `r·k·(k-1) + Σ` stays far
/// below `i128::MAX`.
pub const MAX_ENTRY: u64 = 1 << 40;

/// Largest edge multiplicity accepted by the multigraph classes.
pub const MAX_MULTIPLICITY: u64 = 1 << 20;

/// Above this length `concavity_class` switches to the linear-time scan.
pub const PAIRWISE_CONCAVITY_LIMIT: usize = 1024;

/// Finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntSeq(Vec<u64>);

impl IntSeq {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v > MAX_ENTRY) {
            return Err(Error::EntryTooLarge {
                index: i + 1,
                value: v as i128,
                limit: MAX_ENTRY,
            });
        }
        Ok(Self(values))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Internal constructor for values already known to be in range.
    pub(crate) fn from_vec_unchecked(values: Vec<u64>) -> Self {
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// `a_k` with 1-based `k`; zero for `k = 0` and `k > n`.
    pub fn get(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.0.get(k - 1).copied().unwrap_or(0)
        }
    }

    pub fn total(&self) -> Sum {
        self.0.iter().map(|&v| v as Sum).sum()
    }

    /// Maximum entry, 0 for the empty sequence.
    pub fn max_value(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min_value(&self) -> Option<u64> {
        self.0.iter().copied().min()
    }

    /// `p[k] = Σ_{i≤k} a_i` for `k = 0..=n`.
    pub fn prefix_sums(&self) -> Vec<Sum> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        let mut acc: Sum = 0;
        for &v in &self.0 {
            acc += v as Sum;
            out.push(acc);
        }
        out
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn ensure_nonincreasing(&self) -> Result<()> {
        match self.0.windows(2).position(|w| w[0] < w[1]) {
            Some(i) => Err(Error::NotNonincreasing { index: i + 2 }),
            None => Ok(()),
        }
    }

    pub fn sorted_desc(&self) -> IntSeq {
        let mut v = self.0.clone();
        v.sort_unstable_by(|x, y| y.cmp(x));
        IntSeq(v)
    }

    pub fn to_signed(&self) -> SignedSeq {
        SignedSeq(self.0.iter().map(|&v| v as i64).collect())
    }

    pub fn backward_difference(&self) -> SignedSeq {
        backward_difference(&self.to_signed().0)
    }

    /// `#{i : a_i = value}`.
    pub fn multiplicity(&self, value: u64) -> usize {
        self.0.iter().filter(|&&v| v == value).count()
    }
}

impl TryFrom<Vec<u64>> for IntSeq {
    type Error = Error;

    fn try_from(values: Vec<u64>) -> Result<Self> {
        IntSeq::new(values)
    }
}

impl From<IntSeq> for Vec<u64> {
    fn from(s: IntSeq) -> Self {
        s.0
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Finite sequence of integers; entries may be negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SignedSeq(Vec<i64>);

impl SignedSeq {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if let Some((i, &v)) = values
            .iter()
            .enumerate()
            .find(|(_, &v)| v.unsigned_abs() > MAX_ENTRY)
        {
            return Err(Error::EntryTooLarge {
                index: i + 1,
                value: v as i128,
                limit: MAX_ENTRY,
            });
        }
        Ok(Self(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// `d_k` with 1-based `k`; zero outside `1..=n`.
    pub fn get(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.0.get(k - 1).copied().unwrap_or(0)
        }
    }

    pub fn total(&self) -> Sum {
        self.0.iter().map(|&v| v as Sum).sum()
    }

    pub fn prefix_sums(&self) -> Vec<Sum> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(0);
        let mut acc: Sum = 0;
        for &v in &self.0 {
            acc += v as Sum;
            out.push(acc);
        }
        out
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn ensure_nonincreasing(&self) -> Result<()> {
        match self.0.windows(2).position(|w| w[0] < w[1]) {
            Some(i) => Err(Error::NotNonincreasing { index: i + 2 }),
            None => Ok(()),
        }
    }

    pub fn sorted_desc(&self) -> SignedSeq {
        let mut v = self.0.clone();
        v.sort_unstable_by(|x, y| y.cmp(x));
        SignedSeq(v)
    }

    pub fn backward_difference(&self) -> SignedSeq {
        backward_difference(&self.0)
    }

    pub fn concavity(&self) -> ConcavityClass {
        concavity_class(&self.0)
    }
}

impl TryFrom<Vec<i64>> for SignedSeq {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        SignedSeq::new(values)
    }
}

impl From<SignedSeq> for Vec<i64> {
    fn from(s: SignedSeq) -> Self {
        s.0
    }
}

impl From<&IntSeq> for SignedSeq {
    fn from(s: &IntSeq) -> Self {
        s.to_signed()
    }
}

impl fmt::Display for SignedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// `(∇a)_k = a_k - a_{k-1}` with `a_0 = 0`.
pub fn backward_difference(a: &[i64]) -> SignedSeq {
    let mut prev = 0i64;
    SignedSeq(
        a.iter()
            .map(|&v| {
                let d = v - prev;
                prev = v;
                d
            })
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConcavityClass {
    pub nonincreasing: bool,
    pub almost_nonincreasing: bool,
    pub concave: bool,
    pub almost_concave: bool,
}

/// Classifies `a`, evaluating the pairwise definitions directly for short
/// sequences and switching to running-extremum scans above
/// [`PAIRWISE_CONCAVITY_LIMIT`].
pub fn concavity_class(a: &[i64]) -> ConcavityClass {
    if a.len() > PAIRWISE_CONCAVITY_LIMIT {
        concavity_class_linear(a)
    } else {
        concavity_class_pairwise(a)
    }
}

/// Largest `x_k - x_j` over `lo ≤ j < k < len` (1-based ranges shifted by the caller).
fn max_forward_rise_pairwise(x: &[Sum], lo: usize) -> Option<Sum> {
    let mut best: Option<Sum> = None;
    for j in lo..x.len() {
        for k in j + 1..x.len() {
            let rise = x[k] - x[j];
            best = Some(best.map_or(rise, |b| b.max(rise)));
        }
    }
    best
}

fn max_forward_rise_linear(x: &[Sum], lo: usize) -> Option<Sum> {
    let mut best: Option<Sum> = None;
    let mut running_min: Option<Sum> = None;
    for &v in x.iter().skip(lo) {
        if let Some(m) = running_min {
            let rise = v - m;
            best = Some(best.map_or(rise, |b| b.max(rise)));
        }
        running_min = Some(running_min.map_or(v, |m| m.min(v)));
    }
    best
}

fn classify(a: &[i64], rise: fn(&[Sum], usize) -> Option<Sum>) -> ConcavityClass {
    let values: Vec<Sum> = a.iter().map(|&v| v as Sum).collect();
    // First differences, 0-based slot i holds ȧ_{i+1}; concavity ranges use j ≥ 2.
    let mut prev = 0;
    let diffs: Vec<Sum> = values
        .iter()
        .map(|&v| {
            let d = v - prev;
            prev = v;
            d
        })
        .collect();
    let value_rise = rise(&values, 0);
    let diff_rise = rise(&diffs, 1);
    ConcavityClass {
        nonincreasing: value_rise.is_none_or(|r| r <= 0),
        almost_nonincreasing: value_rise.is_none_or(|r| r <= 1),
        concave: diff_rise.is_none_or(|r| r <= 0),
        almost_concave: diff_rise.is_none_or(|r| r <= 1),
    }
}

pub fn concavity_class_pairwise(a: &[i64]) -> ConcavityClass {
    classify(a, max_forward_rise_pairwise)
}

pub fn concavity_class_linear(a: &[i64]) -> ConcavityClass {
    classify(a, max_forward_rise_linear)
}

/// `C(a) = {k : a_k > a_{k+1}}` with `a_{n+1} = 0`, ascending and 1-based.
pub fn corners(a: &IntSeq) -> Result<Vec<usize>> {
    a.ensure_nonincreasing()?;
    Ok((1..=a.len()).filter(|&k| a.get(k) > a.get(k + 1)).collect())
}

/// `b'_k = #{i : b_i ≥ k}` for `k = 1..=length`.
pub fn conjugate(b: &IntSeq, length: usize) -> IntSeq {
    let mut sorted = b.as_slice().to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    // Walk k upward; `lo` is the number of entries strictly below k.
    let mut lo = 0usize;
    let mut out = Vec::with_capacity(length);
    for k in 1..=length as u64 {
        while lo < n && sorted[lo] < k {
            lo += 1;
        }
        out.push((n - lo) as u64);
    }
    IntSeq(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrefixViolation {
    pub k: usize,
    pub lhs: Sum,
    pub rhs: Sum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceResult {
    pub holds: bool,
    pub first_violation: Option<PrefixViolation>,
}

/// `a ⊴ b`: every prefix sum of `a` is at most the matching prefix sum of
/// `b`, over `k = 1..=max(n, m)` with zero extension.
pub fn weak_dominance(a: &IntSeq, b: &IntSeq) -> DominanceResult {
    let len = a.len().max(b.len());
    let (mut sa, mut sb): (Sum, Sum) = (0, 0);
    for k in 1..=len {
        sa += a.get(k) as Sum;
        sb += b.get(k) as Sum;
        if sa > sb {
            return DominanceResult {
                holds: false,
                first_violation: Some(PrefixViolation { k, lhs: sa, rhs: sb }),
            };
        }
    }
    DominanceResult {
        holds: true,
        first_violation: None,
    }
}

/// `a ⪯ b`: prefix sums of the descending rearrangements dominate and the
/// totals agree.
pub fn majorization(a: &IntSeq, b: &IntSeq) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (sa, sb) = (a.sorted_desc(), b.sorted_desc());
    Ok(a.total() == b.total() && weak_dominance(&sa, &sb).holds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityKind {
    /// Every length-`t` window of the value range meets the sequence.
    Dense,
    /// Every value in `min..max` occurs at least `t` times.
    Deep,
}

pub fn density(a: &IntSeq, t: u64, kind: DensityKind) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    if t == 0 {
        return Err(Error::InvalidParameter {
            name: "t",
            reason: "window size must be at least 1".into(),
        });
    }
    let mut distinct = a.as_slice().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(match kind {
        // A window [k, k+t-1] inside [min, max] misses the sequence exactly
        // when it fits strictly between two consecutive distinct values.
        DensityKind::Dense => distinct.windows(2).all(|w| w[1] - w[0] <= t),
        DensityKind::Deep => {
            let (min, max) = (distinct[0], distinct[distinct.len() - 1]);
            if max - min > a.len() as u64 {
                // Some value in the range is absent; with t ≥ 1 that fails.
                false
            } else {
                (min..max).all(|v| a.multiplicity(v) as u64 >= t)
            }
        }
    })
}
