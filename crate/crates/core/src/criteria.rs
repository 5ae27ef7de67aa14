//! Realizability deciders for every class and every check mode.
//!
//! Each class is decided by inequalities `Σ_{i≤k} a_i ≤ rhs(k)`. The modes
//! differ only in which `k` are evaluated (or, for `ConjugateForm`, in how
//! both sides are computed). Reports record every evaluated inequality by its
//! degree-side index `k`, so checks in different modes can be compared
//! directly.
//!
//! Inputs must already be normalized: degree sequences nonincreasing (jointly
//! permuted with the partner sequence for digraphs). Nothing is sorted here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genconj::{binom2, class_conjugate, split_min_sum, ClassSpec, StructureMask};
use crate::seqcore::{
    conjugate, corners, density, DensityKind, IntSeq, SignedSeq, Sum, MAX_ENTRY, MAX_MULTIPLICITY,
};

/// Largest `max a_i` for which the conjugate form materializes `a'`.
pub const CONJUGATE_FORM_LIMIT: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    Full,
    Corners,
    Reduced,
    ConjugateForm,
    Auto,
}

impl CheckMode {
    pub const ALL: [CheckMode; 5] = [
        CheckMode::Full,
        CheckMode::Corners,
        CheckMode::Reduced,
        CheckMode::ConjugateForm,
        CheckMode::Auto,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckMode::Full => "full",
            CheckMode::Corners => "corners",
            CheckMode::Reduced => "reduced",
            CheckMode::ConjugateForm => "conjugate_form",
            CheckMode::Auto => "auto",
        }
    }

    pub fn parse(s: &str) -> Option<CheckMode> {
        CheckMode::ALL.into_iter().find(|m| m.as_str() == s)
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Realizable,
    NotRealizable,
}

/// One evaluated inequality `lhs ≤ rhs`.
///
/// `k` is always the degree-side index. Conjugate-form inequalities also
/// carry the conjugate index `j` they were generated from (`k = a'_j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugate_index: Option<usize>,
    pub lhs: Sum,
    pub rhs: Sum,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub mode: CheckMode,
    /// Every evaluated inequality, in evaluation order.
    pub checked: Vec<Inequality>,
    /// First failing inequality, if any.
    pub failure: Option<Inequality>,
    pub shortcut: Option<String>,
    pub precondition_note: Option<String>,
}

impl CriterionReport {
    fn precondition(mode: CheckMode, note: String) -> Self {
        Self {
            verdict: Verdict::NotRealizable,
            mode,
            checked: Vec::new(),
            failure: None,
            shortcut: None,
            precondition_note: Some(note),
        }
    }

    fn evaluate(mode: CheckMode, checked: Vec<Inequality>) -> Self {
        let failure = checked.iter().find(|q| !q.holds()).copied();
        Self {
            verdict: if failure.is_some() {
                Verdict::NotRealizable
            } else {
                Verdict::Realizable
            },
            mode,
            checked,
            failure,
            shortcut: None,
            precondition_note: None,
        }
    }

    pub fn is_realizable(&self) -> bool {
        self.verdict == Verdict::Realizable
    }
}

/// `Σ_i x ∧ v_i` in `O(log n)` after sorting.
struct MinSum {
    sorted: Vec<u64>,
    prefix: Vec<Sum>,
}

impl MinSum {
    fn new(values: &[u64]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        let mut prefix = Vec::with_capacity(sorted.len() + 1);
        prefix.push(0);
        let mut acc = 0;
        for &v in &sorted {
            acc += v as Sum;
            prefix.push(acc);
        }
        Self { sorted, prefix }
    }

    fn at(&self, x: Sum) -> Sum {
        let below = self.sorted.partition_point(|&v| (v as Sum) < x);
        self.prefix[below] + x * (self.sorted.len() - below) as Sum
    }
}

/// Right-hand side of the class's degree-form inequality.
enum Rhs {
    /// Prefix sums of a generalized conjugate (bigraphic, structured).
    Prefix(Vec<Sum>),
    /// `Σ_i (r k) ∧ b_i`.
    Berge { b: MinSum, r: Sum },
    /// `Σ_{i≤k} (k-1) ∧ b_i + Σ_{i>k} k ∧ b_i`.
    Fulkerson { b: Vec<u64> },
    /// `k (n - k)`.
    Imbalance { n: Sum },
    /// `r k (k-1) + Σ_{i>k} (r k) ∧ a_i`.
    Chungphaisan { a: Vec<u64>, r: Sum },
    /// `C(n,2) - C(n-k,2)`.
    Landau { n: Sum },
}

impl Rhs {
    fn at(&self, k: usize) -> Sum {
        let ks = k as Sum;
        match self {
            Rhs::Prefix(p) => p[k],
            Rhs::Berge { b, r } => b.at(r * ks),
            Rhs::Fulkerson { b } => split_min_sum(b, k, ks - 1, ks),
            Rhs::Imbalance { n } => ks * (n - ks),
            Rhs::Chungphaisan { a, r } => r * ks * (ks - 1) + split_min_sum(a, k, 0, r * ks),
            Rhs::Landau { n } => binom2(*n) - binom2(n - ks),
        }
    }
}

struct Family {
    n: usize,
    lhs: Vec<Sum>,
    rhs: Rhs,
}

impl Family {
    fn at(&self, k: usize) -> Inequality {
        Inequality {
            k,
            conjugate_index: None,
            lhs: self.lhs[k],
            rhs: self.rhs.at(k),
        }
    }
}

enum Prepared {
    Note(String),
    Ready(Family),
}

/// `m = max{i : a_i ≥ r(i-1) + 1}`, 0 when the set is empty.
pub fn multigraphic_pivot(a: &IntSeq, r: u64) -> usize {
    (1..=a.len())
        .take_while(|&i| a.get(i) > r * (i as u64 - 1))
        .last()
        .unwrap_or(0)
}

/// Indices `k ∈ {1..n-1}` with `d_k - d_{k+1} ≥ 3`.
fn imbalance_gaps(d: &SignedSeq) -> Vec<usize> {
    (1..d.len())
        .filter(|&k| d.get(k) as Sum - d.get(k + 1) as Sum >= 3)
        .collect()
}

fn check_r(r: u64) -> Result<()> {
    if r == 0 || r > MAX_MULTIPLICITY {
        return Err(Error::InvalidR(r));
    }
    Ok(())
}

/// Validates the spec and resolves the preconditions that certify
/// non-realizability on their own.
fn prepare(spec: &ClassSpec) -> Result<Prepared> {
    spec.validate_shape()?;
    let n = spec.n();
    let sum_note = |x: Sum, y: Sum| format!("Σa = {x} differs from Σb = {y}");
    Ok(match spec {
        ClassSpec::Bigraphic { a, b } => {
            a.ensure_nonincreasing()?;
            if a.total() != b.total() {
                return Ok(Prepared::Note(sum_note(a.total(), b.total())));
            }
            Prepared::Ready(Family {
                n,
                lhs: a.prefix_sums(),
                rhs: Rhs::Prefix(conjugate(b, n).prefix_sums()),
            })
        }
        ClassSpec::BipartiteMulti { a, b, r } => {
            a.ensure_nonincreasing()?;
            if a.total() != b.total() {
                return Ok(Prepared::Note(sum_note(a.total(), b.total())));
            }
            if b.max_value() > r * n as u64 {
                return Ok(Prepared::Note(format!(
                    "max b_i = {} exceeds r·n = {}",
                    b.max_value(),
                    r * n as u64
                )));
            }
            Prepared::Ready(Family {
                n,
                lhs: a.prefix_sums(),
                rhs: Rhs::Berge {
                    b: MinSum::new(b.as_slice()),
                    r: *r as Sum,
                },
            })
        }
        ClassSpec::StructuredBipartite { a, b, mask } => {
            a.ensure_nonincreasing()?;
            if a.total() != b.total() {
                return Ok(Prepared::Note(sum_note(a.total(), b.total())));
            }
            if b.max_value() > n as u64 {
                return Ok(Prepared::Note(format!(
                    "max b_i = {} exceeds n = {n}",
                    b.max_value()
                )));
            }
            mask.validate_for(b)?;
            Prepared::Ready(Family {
                n,
                lhs: a.prefix_sums(),
                rhs: Rhs::Prefix(class_conjugate(spec)?.prefix_sums()),
            })
        }
        ClassSpec::Digraphic { a, b } => {
            a.ensure_nonincreasing()?;
            if a.total() != b.total() {
                return Ok(Prepared::Note(sum_note(a.total(), b.total())));
            }
            if n > 0 && b.max_value() > n as u64 - 1 {
                return Ok(Prepared::Note(format!(
                    "max b_i = {} exceeds n - 1 = {}",
                    b.max_value(),
                    n - 1
                )));
            }
            Prepared::Ready(Family {
                n,
                lhs: a.prefix_sums(),
                rhs: Rhs::Fulkerson {
                    b: b.as_slice().to_vec(),
                },
            })
        }
        ClassSpec::Imbalance { d } => {
            d.ensure_nonincreasing()?;
            if d.total() != 0 {
                return Ok(Prepared::Note(format!("Σd = {} is not zero", d.total())));
            }
            Prepared::Ready(Family {
                n,
                lhs: d.prefix_sums(),
                rhs: Rhs::Imbalance { n: n as Sum },
            })
        }
        ClassSpec::Multigraphic { a, r } => degree_family(a, *r)?,
        ClassSpec::Graphic { a } => degree_family(a, 1)?,
        ClassSpec::Tournament { a } => {
            a.ensure_nonincreasing()?;
            let target = binom2(n as Sum);
            if a.total() != target {
                return Ok(Prepared::Note(format!(
                    "Σa = {} differs from n(n-1)/2 = {target}",
                    a.total()
                )));
            }
            Prepared::Ready(Family {
                n,
                lhs: a.prefix_sums(),
                rhs: Rhs::Landau { n: n as Sum },
            })
        }
    })
}

fn degree_family(a: &IntSeq, r: u64) -> Result<Prepared> {
    a.ensure_nonincreasing()?;
    if a.total() % 2 != 0 {
        return Ok(Prepared::Note(format!("Σa = {} is odd", a.total())));
    }
    let cap = r * (a.len() as u64).saturating_sub(1);
    if a.max_value() > cap {
        return Ok(Prepared::Note(format!(
            "max a_i = {} exceeds r·(n - 1) = {cap}",
            a.max_value()
        )));
    }
    Ok(Prepared::Ready(Family {
        n: a.len(),
        lhs: a.prefix_sums(),
        rhs: Rhs::Chungphaisan {
            a: a.as_slice().to_vec(),
            r: r as Sum,
        },
    }))
}

/// The degree sequence whose corners drive the reductions.
fn degree_side(spec: &ClassSpec) -> Option<&IntSeq> {
    match spec {
        ClassSpec::Imbalance { .. } => None,
        ClassSpec::Bigraphic { a, .. }
        | ClassSpec::BipartiteMulti { a, .. }
        | ClassSpec::StructuredBipartite { a, .. }
        | ClassSpec::Digraphic { a, .. }
        | ClassSpec::Multigraphic { a, .. }
        | ClassSpec::Graphic { a }
        | ClassSpec::Tournament { a } => Some(a),
    }
}

fn with_pivot(mut ks: Vec<usize>, m: usize) -> Vec<usize> {
    if m > 0 && !ks.contains(&m) {
        ks.push(m);
        ks.sort_unstable();
    }
    ks
}

/// Degree-side indices evaluated by `mode` (which must not be
/// `ConjugateForm`; `Auto` plans like `Reduced`, except for structured masks
/// outside the one-per-column family, where it falls back to `Full`).
fn plan(spec: &ClassSpec, n: usize, mode: CheckMode) -> Result<Vec<usize>> {
    if mode == CheckMode::Full {
        return Ok((1..=n).collect());
    }
    if let ClassSpec::Imbalance { d } = spec {
        return Ok(imbalance_gaps(d));
    }
    if let ClassSpec::StructuredBipartite { mask, .. } = spec {
        if mode == CheckMode::Auto && !mask.is_one_per_column() {
            return Ok((1..=n).collect());
        }
        mask.ensure_one_per_column()?;
    }
    let a = degree_side(spec).expect("non-imbalance classes have a degree side");
    let cs = corners(a)?;
    let reduced = mode != CheckMode::Corners;
    Ok(match spec {
        ClassSpec::Multigraphic { .. } | ClassSpec::Graphic { .. } => {
            let m = multigraphic_pivot(a, spec.r());
            if reduced {
                with_pivot(cs.into_iter().filter(|&k| k < m).collect(), m)
            } else {
                with_pivot(cs, m)
            }
        }
        _ if !reduced => cs,
        ClassSpec::Bigraphic { b, .. } => cs.into_iter().filter(|&k| (k as u64) < b.max_value()).collect(),
        ClassSpec::BipartiteMulti { b, r, .. } => cs
            .into_iter()
            .filter(|&k| r * (k as u64) < b.max_value())
            .collect(),
        ClassSpec::Digraphic { b, .. } => cs.into_iter().filter(|&k| k as u64 <= b.max_value()).collect(),
        ClassSpec::Tournament { a } => (1..n)
            .filter(|&k| a.get(k) > (n - k) as u64 && ((n - k) as u64) > a.get(k + 1))
            .collect(),
        _ => cs,
    })
}

struct ConjugateRow {
    j: usize,
    k: usize,
    lhs: Sum,
}

/// `a'` over its full support, with `j a'_j + Σ_{i>j} a'_i` for each
/// `j ∈ C(a')`, in ascending `j`.
fn conjugate_rows(a: &IntSeq) -> Result<(IntSeq, Vec<ConjugateRow>)> {
    let top = a.max_value();
    if top > CONJUGATE_FORM_LIMIT {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: format!(
                "max a_i = {top} is too large for the conjugate form (limit {CONJUGATE_FORM_LIMIT})"
            ),
        });
    }
    let ap = conjugate(a, top as usize);
    let suffix: Vec<Sum> = {
        let mut s = vec![0; ap.len() + 2];
        for i in (1..=ap.len()).rev() {
            s[i] = s[i + 1] + ap.get(i) as Sum;
        }
        s
    };
    let rows = corners(&ap)?
        .into_iter()
        .map(|j| {
            let apj = ap.get(j);
            ConjugateRow {
                j,
                k: apj as usize,
                lhs: j as Sum * apj as Sum + suffix[j + 1],
            }
        })
        .collect();
    Ok((ap, rows))
}

/// `Σ_{i≤upto} (a'_i - 1)`.
fn shifted_conjugate_sum(ap: &IntSeq, upto: usize) -> Sum {
    (1..=upto).map(|i| ap.get(i) as Sum - 1).sum()
}

fn conjugate_form(spec: &ClassSpec, family: &Family) -> Result<Vec<Inequality>> {
    let row_ineq = |row: &ConjugateRow, rhs: Sum| Inequality {
        k: row.k,
        conjugate_index: Some(row.j),
        lhs: row.lhs,
        rhs,
    };
    match spec {
        ClassSpec::Bigraphic { a, b } => {
            let bp = conjugate(b, family.n).prefix_sums();
            let (_, rows) = conjugate_rows(a)?;
            Ok(rows
                .iter()
                .filter(|row| (row.k as u64) < b.max_value())
                .map(|row| row_ineq(row, bp[row.k]))
                .collect())
        }
        ClassSpec::BipartiteMulti { a, b, r } => {
            let top = b.max_value();
            let bp = conjugate(b, top as usize).prefix_sums();
            let (_, rows) = conjugate_rows(a)?;
            Ok(rows
                .iter()
                .filter(|row| r * (row.k as u64) < top)
                .map(|row| {
                    let upto = (r * row.k as u64).min(top) as usize;
                    row_ineq(row, bp[upto])
                })
                .collect())
        }
        ClassSpec::Digraphic { a, b } => {
            if !b.is_nonincreasing() {
                return Err(Error::ConjugateFormUnavailable(
                    "the digraphic conjugate form needs b nonincreasing as well".into(),
                ));
            }
            let bc = conjugate(b, family.n);
            let bp = bc.prefix_sums();
            let (_, rows) = conjugate_rows(a)?;
            Ok(rows
                .iter()
                .filter(|row| row.k as u64 <= b.max_value())
                .map(|row| {
                    let k = row.k;
                    row_ineq(row, bp[k] - (k as Sum).min(bc.get(k) as Sum))
                })
                .collect())
        }
        ClassSpec::Multigraphic { a, r } => {
            let m = multigraphic_pivot(a, *r);
            if m == 0 {
                return Ok(Vec::new());
            }
            let r = *r as Sum;
            let ms = m as Sum;
            let (ap, rows) = conjugate_rows(a)?;
            let mut out = vec![Inequality {
                k: m,
                conjugate_index: None,
                lhs: family.lhs[m],
                rhs: split_min_sum(a.as_slice(), m, r * (ms - 1), r * ms),
            }];
            out.extend(
                rows.iter()
                    .filter(|row| row.k < m)
                    .map(|row| row_ineq(row, shifted_conjugate_sum(&ap, r as usize * row.k))),
            );
            Ok(out)
        }
        ClassSpec::Graphic { a } => {
            let m = multigraphic_pivot(a, 1);
            if m == 0 {
                return Ok(Vec::new());
            }
            let (ap, rows) = conjugate_rows(a)?;
            let mut out = vec![Inequality {
                k: m,
                conjugate_index: None,
                lhs: family.lhs[m],
                rhs: shifted_conjugate_sum(&ap, m),
            }];
            out.extend(
                rows.iter()
                    .filter(|row| row.k < m)
                    .map(|row| row_ineq(row, shifted_conjugate_sum(&ap, row.k))),
            );
            Ok(out)
        }
        ClassSpec::Tournament { a } => {
            let n = family.n as Sum;
            let (_, rows) = conjugate_rows(a)?;
            Ok(rows
                .iter()
                .map(|row| row_ineq(row, binom2(n) - binom2(n - row.k as Sum)))
                .collect())
        }
        ClassSpec::StructuredBipartite { .. } => Err(Error::ConjugateFormUnavailable(
            "structured bipartite criteria have no conjugate form".into(),
        )),
        ClassSpec::Imbalance { .. } => Err(Error::ConjugateFormUnavailable(
            "imbalance criteria have no conjugate form".into(),
        )),
    }
}

/// Decides `spec` in `mode`.
pub fn check(spec: &ClassSpec, mode: CheckMode) -> Result<CriterionReport> {
    let family = match prepare(spec)? {
        Prepared::Note(note) => return Ok(CriterionReport::precondition(mode, note)),
        Prepared::Ready(f) => f,
    };
    if mode == CheckMode::Auto {
        if let Some(sc) = sufficient_shortcut(spec) {
            return Ok(CriterionReport {
                verdict: Verdict::Realizable,
                mode,
                checked: sc.checked,
                failure: None,
                shortcut: Some(sc.name.to_string()),
                precondition_note: None,
            });
        }
    }
    let checked = match mode {
        CheckMode::ConjugateForm => conjugate_form(spec, &family)?,
        _ => {
            let ks = plan(spec, family.n, mode)?;
            let checked: Vec<Inequality> = ks.into_iter().map(|k| family.at(k)).collect();
            if let ClassSpec::Multigraphic { a, r } = spec {
                debug_assert!(checked.iter().all(|q| {
                    let m = multigraphic_pivot(a, *r);
                    q.k > m || q.rhs == chen_rhs(a, *r, q.k)
                }));
            }
            checked
        }
    };
    Ok(CriterionReport::evaluate(mode, checked))
}

/// Evaluates the class's degree-form inequalities at exactly `indices`.
pub fn check_at(spec: &ClassSpec, indices: &[usize]) -> Result<CriterionReport> {
    let family = match prepare(spec)? {
        Prepared::Note(note) => return Ok(CriterionReport::precondition(CheckMode::Full, note)),
        Prepared::Ready(f) => f,
    };
    if let Some(&bad) = indices.iter().find(|&&k| k == 0 || k > family.n) {
        return Err(Error::InvalidParameter {
            name: "indices",
            reason: format!("index {bad} is outside 1..={}", family.n),
        });
    }
    Ok(CriterionReport::evaluate(
        CheckMode::Full,
        indices.iter().map(|&k| family.at(k)).collect(),
    ))
}

/// Degree-side index set `mode` would evaluate, or `None` when a
/// precondition already decides the instance.
pub fn planned_indices(spec: &ClassSpec, mode: CheckMode) -> Result<Option<Vec<usize>>> {
    let family = match prepare(spec)? {
        Prepared::Note(_) => return Ok(None),
        Prepared::Ready(f) => f,
    };
    Ok(Some(match mode {
        CheckMode::ConjugateForm => conjugate_form(spec, &family)?
            .into_iter()
            .map(|q| q.k)
            .collect(),
        _ => plan(spec, family.n, mode)?,
    }))
}

/// Sizes of the `Full`, `Corners` and `Reduced` index sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCounts {
    pub full: usize,
    pub corners: usize,
    pub reduced: usize,
}

/// Index-set sizes of `spec`, computed whether or not a precondition
/// already decides it. Structured masks outside the one-per-column family
/// report `Full` for all three.
pub fn inequality_counts(spec: &ClassSpec) -> Result<InequalityCounts> {
    spec.validate_shape()?;
    match spec {
        ClassSpec::Imbalance { d } => d.ensure_nonincreasing()?,
        _ => degree_side(spec)
            .expect("non-imbalance classes have a degree side")
            .ensure_nonincreasing()?,
    }
    let n = spec.n();
    if let ClassSpec::StructuredBipartite { mask, .. } = spec {
        if !mask.is_one_per_column() {
            return Ok(InequalityCounts {
                full: n,
                corners: n,
                reduced: n,
            });
        }
    }
    Ok(InequalityCounts {
        full: n,
        corners: plan(spec, n, CheckMode::Corners)?.len(),
        reduced: plan(spec, n, CheckMode::Reduced)?.len(),
    })
}

/// `Σ_{i≤k} (r(k-1)) ∧ a_i + Σ_{i>k} (r k) ∧ a_i`.
pub fn chen_rhs(a: &IntSeq, r: u64, k: usize) -> Sum {
    let (r, ks) = (r as Sum, k as Sum);
    split_min_sum(a.as_slice(), k, r * (ks - 1), r * ks)
}

/// `r k (k-1) + Σ_{i>k} (r k) ∧ a_i`.
pub fn chungphaisan_rhs(a: &IntSeq, r: u64, k: usize) -> Sum {
    Rhs::Chungphaisan {
        a: a.as_slice().to_vec(),
        r: r as Sum,
    }
    .at(k)
}

pub fn check_bigraphic(a: &IntSeq, b: &IntSeq, mode: CheckMode) -> Result<CriterionReport> {
    check(
        &ClassSpec::Bigraphic {
            a: a.clone(),
            b: b.clone(),
        },
        mode,
    )
}

pub fn check_bipartite_multigraph(
    a: &IntSeq,
    b: &IntSeq,
    r: u64,
    mode: CheckMode,
) -> Result<CriterionReport> {
    check_r(r)?;
    check(
        &ClassSpec::BipartiteMulti {
            a: a.clone(),
            b: b.clone(),
            r,
        },
        mode,
    )
}

pub fn check_structured_bipartite(
    a: &IntSeq,
    b: &IntSeq,
    mask: &StructureMask,
    mode: CheckMode,
) -> Result<CriterionReport> {
    check(
        &ClassSpec::StructuredBipartite {
            a: a.clone(),
            b: b.clone(),
            mask: mask.clone(),
        },
        mode,
    )
}

pub fn check_digraphic(a: &IntSeq, b: &IntSeq, mode: CheckMode) -> Result<CriterionReport> {
    check(
        &ClassSpec::Digraphic {
            a: a.clone(),
            b: b.clone(),
        },
        mode,
    )
}

pub fn check_imbalance(d: &SignedSeq, mode: CheckMode) -> Result<CriterionReport> {
    check(&ClassSpec::Imbalance { d: d.clone() }, mode)
}

pub fn check_multigraphic(a: &IntSeq, r: u64, mode: CheckMode) -> Result<CriterionReport> {
    check_r(r)?;
    check(&ClassSpec::Multigraphic { a: a.clone(), r }, mode)
}

pub fn check_graphic(a: &IntSeq, mode: CheckMode) -> Result<CriterionReport> {
    check(&ClassSpec::Graphic { a: a.clone() }, mode)
}

pub fn check_score_sequence(a: &IntSeq, mode: CheckMode) -> Result<CriterionReport> {
    check(&ClassSpec::Tournament { a: a.clone() }, mode)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkipClass {
    Bigraphic,
    /// Only corners `k ≤ m` (the multigraphic pivot for this `r`) take part.
    Multigraphic { r: u64 },
}

/// Drops middle corners `k2` of consecutive corners `k1 < k2 < k3` with
/// `a_{k1} = a_{k2} + 1 = a_{k3} + 2`, when `k1` and `k3` are both kept.
///
/// Along a run of unit steps the kept and dropped corners alternate. Indices
/// that are not corners pass through unchanged.
pub fn skip_corner_filter(a: &IntSeq, indices: &[usize], class: SkipClass) -> Result<Vec<usize>> {
    let cs = corners(a)?;
    let limit = match class {
        SkipClass::Bigraphic => usize::MAX,
        SkipClass::Multigraphic { r } => {
            check_r(r)?;
            multigraphic_pivot(a, r)
        }
    };
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let position = |k: usize| cs.binary_search(&k).ok();
    let mut kept: Vec<usize> = Vec::with_capacity(sorted.len());
    let mut last_dropped: Option<usize> = None;
    for &k in &sorted {
        let drop = position(k).is_some_and(|p| {
            if p == 0 || p + 1 >= cs.len() {
                return false;
            }
            let (k1, k3) = (cs[p - 1], cs[p + 1]);
            let prev_kept = kept.last() == Some(&k1) && last_dropped != Some(k1);
            k3 <= limit
                && prev_kept
                && sorted.binary_search(&k3).is_ok()
                && a.get(k1) == a.get(k) + 1
                && a.get(k) == a.get(k3) + 1
        });
        if drop {
            last_dropped = Some(k);
        } else {
            kept.push(k);
        }
    }
    Ok(kept)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortcut {
    pub name: &'static str,
    /// Inequalities the shortcut had to evaluate (empty for purely
    /// structural conditions).
    pub checked: Vec<Inequality>,
}

fn structural(name: &'static str) -> Option<Shortcut> {
    Some(Shortcut {
        name,
        checked: Vec::new(),
    })
}

/// A sufficient condition for realizability, if one applies. Never
/// certifies non-realizability.
pub fn sufficient_shortcut(spec: &ClassSpec) -> Option<Shortcut> {
    match spec {
        ClassSpec::Bigraphic { a, b } => bigraphic_shortcut(a, b),
        ClassSpec::Imbalance { d } => {
            let applies = d.is_nonincreasing()
                && d.total() == 0
                && (1..d.len()).all(|k| d.get(k) as Sum - d.get(k + 1) as Sum <= 2);
            if applies {
                structural("small_imbalance_gaps")
            } else {
                None
            }
        }
        ClassSpec::Graphic { a } => graphic_shortcut(a),
        ClassSpec::Tournament { a } => {
            let n = a.len();
            if n == 0 || a.total() != binom2(n as Sum) {
                return None;
            }
            let (lo, hi) = (a.min_value()?, a.max_value());
            if hi - lo > n as u64 {
                return None;
            }
            let missing = (lo..=hi).filter(|&v| a.multiplicity(v) == 0).count();
            if missing <= 1 {
                structural("near_gap_free_scores")
            } else {
                None
            }
        }
        _ => None,
    }
}

fn bigraphic_shortcut(a: &IntSeq, b: &IntSeq) -> Option<Shortcut> {
    if a.total() != b.total() {
        return None;
    }
    let (n, m) = (a.len() as u64, b.len() as u64);
    let top_b = b.max_value();
    let in_range = !a.is_empty()
        && !b.is_empty()
        && a.iter().all(|v| (1..=m).contains(&v))
        && b.iter().all(|v| (1..=n).contains(&v));
    if in_range {
        let constant = |s: &IntSeq| s.iter().all(|v| v == s.get(1));
        if constant(a) && constant(b) {
            return structural("constant_pair");
        }
        let dense = |s: &IntSeq, t| density(s, t, DensityKind::Dense).unwrap_or(false);
        let deep = |s: &IntSeq, t| density(s, t, DensityKind::Deep).unwrap_or(false);
        if dense(a, 1) && dense(b, 1) {
            return structural("gap_free_pair");
        }
        if (1..=n.max(m)).any(|t| dense(a, t) && deep(b, t)) {
            return structural("dense_deep");
        }
    }
    if (1..=MAX_ENTRY).contains(&top_b) && conjugate(b, top_b as usize).get(top_b as usize) >= a.max_value() {
        return structural("saturated_top_rows");
    }
    None
}

fn graphic_shortcut(a: &IntSeq) -> Option<Shortcut> {
    let n = a.len();
    if n == 0 || !a.is_nonincreasing() || a.total() % 2 != 0 {
        return None;
    }
    let (p, q) = (a.min_value()?, a.max_value());
    if p < 1 || q > n as u64 - 1 {
        return None;
    }
    let interior: Vec<usize> = (p + 1..q).map(|j| a.multiplicity(j)).collect();
    let many: Vec<usize> = interior.iter().copied().filter(|&c| c >= 2).collect();
    let sparse = many.is_empty() || (many.len() == 1 && many[0] == 2);
    let gap_free = interior.iter().filter(|&&c| c == 0).count() <= 1;
    let name = if sparse {
        "sparse_multiplicities"
    } else if gap_free {
        "near_gap_free_degrees"
    } else {
        return None;
    };
    let m = multigraphic_pivot(a, 1);
    let single = Inequality {
        k: m,
        conjugate_index: None,
        lhs: a.prefix_sums()[m],
        rhs: chungphaisan_rhs(a, 1, m),
    };
    single.holds().then(|| Shortcut {
        name,
        checked: vec![single],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genconj::Polarity;

    fn s(v: &[u64]) -> IntSeq {
        IntSeq::new(v.to_vec()).unwrap()
    }

    fn d(v: &[i64]) -> SignedSeq {
        SignedSeq::new(v.to_vec()).unwrap()
    }

    fn ks(r: &CriterionReport) -> Vec<usize> {
        r.checked.iter().map(|q| q.k).collect()
    }

    fn all_modes(spec: &ClassSpec) -> Vec<Verdict> {
        CheckMode::ALL
            .into_iter()
            .filter_map(|m| check(spec, m).ok())
            .map(|r| r.verdict)
            .collect()
    }

    #[test]
    fn bigraphic_examples() {
        let r = check_bigraphic(&s(&[2, 2]), &s(&[2, 2]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        assert!(r.checked.is_empty());

        let r = check_bigraphic(&s(&[2, 2, 1]), &s(&[3, 2]), CheckMode::Full).unwrap();
        assert!(r.is_realizable());
        assert_eq!(
            r.checked.iter().map(|q| (q.lhs, q.rhs)).collect::<Vec<_>>(),
            vec![(2, 2), (4, 4), (5, 5)]
        );

        for mode in [CheckMode::Full, CheckMode::Corners, CheckMode::Reduced] {
            let r = check_bigraphic(&s(&[3, 1]), &s(&[2, 2]), mode).unwrap();
            assert_eq!(r.verdict, Verdict::NotRealizable);
            let f = r.failure.unwrap();
            assert_eq!((f.k, f.lhs, f.rhs), (1, 3, 2));
        }
        let r = check_bigraphic(&s(&[3, 1]), &s(&[2, 2]), CheckMode::ConjugateForm).unwrap();
        assert_eq!(r.verdict, Verdict::NotRealizable);
    }

    #[test]
    fn bigraphic_errors_and_notes() {
        assert_eq!(
            check_bigraphic(&s(&[1, 2]), &s(&[3]), CheckMode::Full),
            Err(Error::NotNonincreasing { index: 2 })
        );
        let r = check_bigraphic(&s(&[1]), &s(&[2]), CheckMode::Reduced).unwrap();
        assert_eq!(r.verdict, Verdict::NotRealizable);
        assert!(r.precondition_note.is_some());
        assert!(r.failure.is_none());
    }

    #[test]
    fn berge_examples() {
        let r = check_bipartite_multigraph(&s(&[4, 2]), &s(&[3, 3]), 2, CheckMode::Full).unwrap();
        assert!(r.is_realizable());
        assert_eq!(
            r.checked.iter().map(|q| (q.lhs, q.rhs)).collect::<Vec<_>>(),
            vec![(4, 4), (6, 6)]
        );
        let r = check_bipartite_multigraph(&s(&[5, 1]), &s(&[3, 3]), 2, CheckMode::Full).unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (1, 5, 4));
        assert_eq!(
            check_bipartite_multigraph(&s(&[1]), &s(&[1]), 0, CheckMode::Full),
            Err(Error::InvalidR(0))
        );
        for mode in CheckMode::ALL {
            let a = s(&[3, 2, 2]);
            let b = s(&[3, 2, 1, 1]);
            assert_eq!(
                check_bipartite_multigraph(&a, &b, 1, mode).unwrap().verdict,
                check_bigraphic(&a, &b, mode).unwrap().verdict
            );
        }
    }

    #[test]
    fn structured_examples() {
        let id = StructureMask::from_rows(&[vec![1, 0], vec![0, 1]], Polarity::Fill).unwrap();
        let r = check_structured_bipartite(&s(&[1, 1]), &s(&[1, 1]), &id, CheckMode::Reduced)
            .unwrap();
        assert!(r.is_realizable());
        let r = check_structured_bipartite(&s(&[2, 0]), &s(&[1, 1]), &id, CheckMode::Reduced)
            .unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (1, 2, 1));
        assert!(matches!(
            check_structured_bipartite(&s(&[1, 1]), &s(&[1, 1]), &id, CheckMode::ConjugateForm),
            Err(Error::ConjugateFormUnavailable(_))
        ));

        let mask = StructureMask::from_rows(
            &[
                vec![1, 1, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
            ],
            Polarity::Avoid,
        )
        .unwrap();
        let a = s(&[2, 1, 1, 1]);
        let r = check_structured_bipartite(&a, &a, &mask, CheckMode::Full).unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (2, 3, 2));
        assert!(matches!(
            check_structured_bipartite(&a, &a, &mask, CheckMode::Corners),
            Err(Error::MaskInvalid { col: Some(1), .. })
        ));
        let auto = check_structured_bipartite(&a, &a, &mask, CheckMode::Auto).unwrap();
        assert_eq!(ks(&auto), vec![1, 2, 3, 4]);
        assert_eq!(auto.verdict, Verdict::NotRealizable);
    }

    #[test]
    fn digraphic_examples() {
        assert_eq!(all_modes(&ClassSpec::Digraphic { a: s(&[1, 1]), b: s(&[1, 1]) }), vec![Verdict::Realizable; 5]);
        let r = check_digraphic(&s(&[2, 0, 0]), &s(&[0, 1, 1]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        let r = check_digraphic(&s(&[1, 0]), &s(&[1, 0]), CheckMode::Full).unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (1, 1, 0));
        assert!(matches!(
            check_digraphic(&s(&[2, 0, 0]), &s(&[0, 1, 1]), CheckMode::ConjugateForm),
            Err(Error::ConjugateFormUnavailable(_))
        ));
        assert_eq!(
            check_digraphic(&s(&[1]), &s(&[1, 0]), CheckMode::Full),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn imbalance_examples() {
        let r = check_imbalance(&d(&[1, 0, -1]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        assert!(r.checked.is_empty());
        let r = check_imbalance(&d(&[2, -2]), CheckMode::Full).unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (1, 2, 1));
        let r = check_imbalance(&d(&[3, 3, -3, -3]), CheckMode::Reduced).unwrap();
        assert_eq!(ks(&r), vec![2]);
        let f = r.failure.unwrap();
        assert_eq!((f.lhs, f.rhs), (6, 4));
        assert_eq!(
            check_imbalance(&d(&[3, 3, -3, -3]), CheckMode::Corners).unwrap(),
            CriterionReport { mode: CheckMode::Corners, ..r }
        );
        let r = check_imbalance(&d(&[1, 1]), CheckMode::Full).unwrap();
        assert!(r.precondition_note.is_some());
    }

    #[test]
    fn multigraphic_examples() {
        let r = check_multigraphic(&s(&[2, 2, 2]), 1, CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        assert_eq!(ks(&r), vec![2]);
        assert_eq!((r.checked[0].lhs, r.checked[0].rhs), (4, 4));

        let r = check_multigraphic(&s(&[4, 4, 4]), 2, CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        assert_eq!(multigraphic_pivot(&s(&[4, 4, 4]), 2), 2);
        assert_eq!((r.checked[0].k, r.checked[0].lhs, r.checked[0].rhs), (2, 8, 8));

        let r = check_multigraphic(&s(&[4, 4]), 2, CheckMode::Full).unwrap();
        assert_eq!(r.verdict, Verdict::NotRealizable);
        assert!(r.precondition_note.unwrap().contains("r·(n - 1)"));
        let r = check_multigraphic(&s(&[1, 0]), 1, CheckMode::Full).unwrap();
        assert!(r.precondition_note.unwrap().contains("odd"));
    }

    #[test]
    fn graphic_examples() {
        assert_eq!(all_modes(&ClassSpec::Graphic { a: s(&[2, 2, 2]) }), vec![Verdict::Realizable; 5]);
        let r = check_graphic(&s(&[3, 3, 1, 1]), CheckMode::Reduced).unwrap();
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (2, 6, 4));
        let r = check_graphic(&s(&[0, 0, 0, 0]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable());
        assert!(r.checked.is_empty());
        let r = check_graphic(&s(&[0, 0, 0, 0]), CheckMode::ConjugateForm).unwrap();
        assert!(r.is_realizable() && r.checked.is_empty());
    }

    #[test]
    fn score_sequence_examples() {
        let r = check_score_sequence(&s(&[2, 1, 0]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable() && r.checked.is_empty());
        let r = check_score_sequence(&s(&[1, 1, 1]), CheckMode::Reduced).unwrap();
        assert!(r.is_realizable() && r.checked.is_empty());
        let r = check_score_sequence(&s(&[3, 3, 0, 0]), CheckMode::Reduced).unwrap();
        assert_eq!(ks(&r), vec![2]);
        let f = r.failure.unwrap();
        assert_eq!((f.lhs, f.rhs), (6, 5));
        assert_eq!(
            all_modes(&ClassSpec::Tournament { a: s(&[3, 3, 0, 0]) }),
            vec![Verdict::NotRealizable; 5]
        );
        let r = check_score_sequence(&s(&[1, 1]), CheckMode::Full).unwrap();
        assert!(r.precondition_note.is_some());
    }

    #[test]
    fn conjugate_form_reports_both_indices() {
        let r = check_bigraphic(&s(&[3, 1]), &s(&[2, 2]), CheckMode::ConjugateForm).unwrap();
        // a' = (2,1,1), C(a') = {1,3}; k = a'_1 = 2 is not below max b = 2
        let pairs: Vec<_> = r.checked.iter().map(|q| (q.conjugate_index, q.k)).collect();
        assert_eq!(pairs, vec![(Some(3), 1)]);
        let f = r.failure.unwrap();
        assert_eq!((f.k, f.lhs, f.rhs), (1, 3, 2));
    }

    #[test]
    fn skip_corner_examples() {
        let f = |a: &[u64]| {
            let a = s(a);
            let cs = corners(&a).unwrap();
            skip_corner_filter(&a, &cs, SkipClass::Bigraphic).unwrap()
        };
        assert_eq!(f(&[3, 2, 1]), vec![1, 3]);
        assert_eq!(f(&[4, 2, 1]), vec![1, 2, 3]);
        assert_eq!(f(&[5, 5]), vec![2]);
        assert_eq!(f(&[5, 4, 3, 2, 1]), vec![1, 3, 5]);
        assert!(skip_corner_filter(&s(&[1, 2]), &[1], SkipClass::Bigraphic).is_err());
    }

    #[test]
    fn shortcut_examples() {
        let sc = sufficient_shortcut(&ClassSpec::Bigraphic {
            a: s(&[2, 2, 1, 1]),
            b: s(&[3, 2, 1]),
        })
        .unwrap();
        assert_eq!(sc.name, "gap_free_pair");
        let sc = sufficient_shortcut(&ClassSpec::Imbalance {
            d: d(&[2, 1, 0, -1, -2]),
        })
        .unwrap();
        assert_eq!(sc.name, "small_imbalance_gaps");
        assert!(sufficient_shortcut(&ClassSpec::Tournament {
            a: s(&[2, 2, 2, 1, 1, 1])
        })
        .is_none());
        assert!(sufficient_shortcut(&ClassSpec::Graphic { a: s(&[3, 3, 1, 1]) }).is_none());
        let sc = sufficient_shortcut(&ClassSpec::Graphic { a: s(&[2, 2, 2]) }).unwrap();
        assert_eq!(sc.checked.len(), 1);
        let auto = check_graphic(&s(&[2, 2, 2]), CheckMode::Auto).unwrap();
        assert_eq!(auto.shortcut.as_deref(), Some(sc.name));
    }

    #[test]
    fn check_at_validates_indices() {
        let spec = ClassSpec::Graphic { a: s(&[1, 1]) };
        assert!(check_at(&spec, &[0]).is_err());
        assert!(check_at(&spec, &[3]).is_err());
        assert!(check_at(&spec, &[1, 2]).unwrap().is_realizable());
    }
}
