//! Generalized conjugates.
//!
//! For each class the set `S` of admissible matrices has a unique maximal
//! element under column-sum dominance; its column sums are the class's
//! generalized conjugate. Two independent routes compute it here:
//! [`class_conjugate`] evaluates the closed-form prefix sums, and
//! [`maximal_matrix`] builds the maximal matrix explicitly.
//!
//! Matrices are `m × n` with `m` rows (row sums are the "partner" side, `b`)
//! and `n` columns (column sums are compared against `a`). The tournament
//! class has no row constraint; its maximal matrix is strictly lower
//! triangular.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::seqcore::{conjugate, IntSeq, SignedSeq, Sum, MAX_MULTIPLICITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Bigraphic,
    BipartiteMulti,
    StructuredBipartite,
    Digraphic,
    Imbalance,
    Multigraphic,
    Graphic,
    Tournament,
}

impl ClassTag {
    pub const ALL: [ClassTag; 8] = [
        ClassTag::Bigraphic,
        ClassTag::BipartiteMulti,
        ClassTag::StructuredBipartite,
        ClassTag::Digraphic,
        ClassTag::Imbalance,
        ClassTag::Multigraphic,
        ClassTag::Graphic,
        ClassTag::Tournament,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Bigraphic => "bigraphic",
            ClassTag::BipartiteMulti => "bipartite_multi",
            ClassTag::StructuredBipartite => "structured_bipartite",
            ClassTag::Digraphic => "digraphic",
            ClassTag::Imbalance => "imbalance",
            ClassTag::Multigraphic => "multigraphic",
            ClassTag::Graphic => "graphic",
            ClassTag::Tournament => "tournament",
        }
    }

    pub fn parse(s: &str) -> Option<ClassTag> {
        ClassTag::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether the marked cells are structural ones or structural zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Fill,
    Avoid,
}

/// Binary `m × n` mask of forced (`Fill`) or forbidden (`Avoid`) cells.
///
/// The corner reduction needs at most one marked cell per column; masks
/// without that property are representable (and usable in `Full` mode) but
/// rejected by the reduced modes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureMask {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
    polarity: Polarity,
}

impl StructureMask {
    pub fn new(rows: usize, cols: usize, cells: Vec<bool>, polarity: Polarity) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::MaskInvalid {
                row: None,
                col: None,
                reason: format!(
                    "expected {rows}×{cols} = {} cells, got {}",
                    rows * cols,
                    cells.len()
                ),
            });
        }
        Ok(Self {
            rows,
            cols,
            cells,
            polarity,
        })
    }

    pub fn from_rows(rows: &[Vec<u8>], polarity: Polarity) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::MaskInvalid {
                    row: Some(i + 1),
                    col: None,
                    reason: format!("row has {} entries, expected {cols}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::MaskInvalid {
                        row: Some(i + 1),
                        col: Some(j + 1),
                        reason: format!("entry {v} is not 0 or 1"),
                    });
                }
                cells.push(v == 1);
            }
        }
        Self::new(rows.len(), cols, cells, polarity)
    }

    /// The `n × n` identity with `Avoid` polarity: a zero diagonal.
    pub fn identity_avoid(n: usize) -> Self {
        let cells = (0..n * n).map(|x| x / n == x % n).collect();
        Self {
            rows: n,
            cols: n,
            cells,
            polarity: Polarity::Avoid,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    /// Cell `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row_count(&self, i: usize) -> usize {
        (1..=self.cols).filter(|&j| self.get(i, j)).count()
    }

    pub fn col_count(&self, j: usize) -> usize {
        (1..=self.rows).filter(|&i| self.get(i, j)).count()
    }

    pub fn is_one_per_column(&self) -> bool {
        (1..=self.cols).all(|j| self.col_count(j) <= 1)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    /// Checks the mask against row sums `b`: `b`-fillable (marked cells per
    /// row ≤ `b_i`) or `b`-avoidable (marked cells per row ≤ `n - b_i`).
    /// The one-per-column condition is checked separately by
    /// [`StructureMask::ensure_one_per_column`].
    pub fn validate_for(&self, b: &IntSeq) -> Result<()> {
        if self.rows != b.len() {
            return Err(Error::MaskInvalid {
                row: None,
                col: None,
                reason: format!("mask has {} rows but b has length {}", self.rows, b.len()),
            });
        }
        for i in 1..=self.rows {
            let marked = self.row_count(i) as u64;
            let bi = b.get(i);
            let ok = match self.polarity {
                Polarity::Fill => marked <= bi,
                Polarity::Avoid => bi <= self.cols as u64 && marked <= self.cols as u64 - bi,
            };
            if !ok {
                let reason = match self.polarity {
                    Polarity::Fill => format!("{marked} forced cells exceed b_{i} = {bi}"),
                    Polarity::Avoid => format!(
                        "{marked} forbidden cells leave fewer than b_{i} = {bi} of {} columns",
                        self.cols
                    ),
                };
                return Err(Error::MaskInvalid {
                    row: Some(i),
                    col: None,
                    reason,
                });
            }
        }
        Ok(())
    }

    pub fn ensure_one_per_column(&self) -> Result<()> {
        match (1..=self.cols).find(|&j| self.col_count(j) > 1) {
            Some(j) => Err(Error::MaskInvalid {
                row: None,
                col: Some(j),
                reason: format!(
                    "column has {} marked cells; the corner reduction needs at most one",
                    self.col_count(j)
                ),
            }),
            None => Ok(()),
        }
    }
}

/// One instance of one of the eight classes.
///
/// Bipartite classes: `a` holds the column sums (length `n`), `b` the row sums
/// (length `m`). Square classes use a single degree sequence `a` of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Bigraphic { a: IntSeq, b: IntSeq },
    BipartiteMulti { a: IntSeq, b: IntSeq, r: u64 },
    StructuredBipartite { a: IntSeq, b: IntSeq, mask: StructureMask },
    /// `a` out-degrees, `b` in-degrees, vertex-aligned.
    Digraphic { a: IntSeq, b: IntSeq },
    Imbalance { d: SignedSeq },
    Multigraphic { a: IntSeq, r: u64 },
    Graphic { a: IntSeq },
    Tournament { a: IntSeq },
}

impl ClassSpec {
    pub fn tag(&self) -> ClassTag {
        match self {
            ClassSpec::Bigraphic { .. } => ClassTag::Bigraphic,
            ClassSpec::BipartiteMulti { .. } => ClassTag::BipartiteMulti,
            ClassSpec::StructuredBipartite { .. } => ClassTag::StructuredBipartite,
            ClassSpec::Digraphic { .. } => ClassTag::Digraphic,
            ClassSpec::Imbalance { .. } => ClassTag::Imbalance,
            ClassSpec::Multigraphic { .. } => ClassTag::Multigraphic,
            ClassSpec::Graphic { .. } => ClassTag::Graphic,
            ClassSpec::Tournament { .. } => ClassTag::Tournament,
        }
    }

    /// Tournament on `n` vertices with placeholder scores; its conjugate and
    /// maximal matrix depend on `n` only.
    pub fn tournament_of_order(n: usize) -> Self {
        ClassSpec::Tournament { a: IntSeq::zeros(n) }
    }

    /// Column count `n` of the class's matrices.
    pub fn n(&self) -> usize {
        match self {
            ClassSpec::Bigraphic { a, .. }
            | ClassSpec::BipartiteMulti { a, .. }
            | ClassSpec::StructuredBipartite { a, .. }
            | ClassSpec::Digraphic { a, .. }
            | ClassSpec::Multigraphic { a, .. }
            | ClassSpec::Graphic { a }
            | ClassSpec::Tournament { a } => a.len(),
            ClassSpec::Imbalance { d } => d.len(),
        }
    }

    /// Edge multiplicity cap (1 for simple classes).
    pub fn r(&self) -> u64 {
        match self {
            ClassSpec::BipartiteMulti { r, .. } | ClassSpec::Multigraphic { r, .. } => *r,
            _ => 1,
        }
    }

    /// Shape checks shared by every consumer: `r` range, square lengths,
    /// mask dimensions.
    pub fn validate_shape(&self) -> Result<()> {
        let r = self.r();
        if r == 0 || r > MAX_MULTIPLICITY {
            return Err(Error::InvalidR(r));
        }
        match self {
            ClassSpec::Digraphic { a, b } if a.len() != b.len() => Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            }),
            ClassSpec::StructuredBipartite { a, b, mask } => {
                if mask.cols() != a.len() || mask.rows() != b.len() {
                    return Err(Error::MaskInvalid {
                        row: None,
                        col: None,
                        reason: format!(
                            "mask is {}×{} but (|b|, |a|) = ({}, {})",
                            mask.rows(),
                            mask.cols(),
                            b.len(),
                            a.len()
                        ),
                    });
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// Nonnegative integer `m × n` matrix with cached row and column sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    row_sums: IntSeq,
    col_sums: IntSeq,
}

impl IntMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows × cols");
        let row_sums = (0..rows)
            .map(|i| entries[i * cols..(i + 1) * cols].iter().sum())
            .collect();
        let col_sums = (0..cols)
            .map(|j| (0..rows).map(|i| entries[i * cols + j]).sum())
            .collect();
        Self {
            rows,
            cols,
            entries,
            row_sums: IntSeq::from_vec_unchecked(row_sums),
            col_sums: IntSeq::from_vec_unchecked(col_sums),
        }
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_entries(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row_sums(&self) -> &IntSeq {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &IntSeq {
        &self.col_sums
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn check_existence(spec: &ClassSpec) -> Result<()> {
    spec.validate_shape()?;
    let n = spec.n() as u64;
    match spec {
        ClassSpec::Bigraphic { .. } | ClassSpec::Tournament { .. } => Ok(()),
        ClassSpec::BipartiteMulti { b, r, .. } => {
            let cap = r * n;
            if b.max_value() > cap {
                return Err(Error::PreconditionFailed(format!(
                    "max b_i = {} exceeds r·n = {cap}",
                    b.max_value()
                )));
            }
            Ok(())
        }
        ClassSpec::StructuredBipartite { b, mask, .. } => {
            if b.max_value() > n {
                return Err(Error::PreconditionFailed(format!(
                    "max b_i = {} exceeds n = {n}",
                    b.max_value()
                )));
            }
            mask.validate_for(b)
        }
        ClassSpec::Digraphic { b, .. } => {
            if n > 0 && b.max_value() > n - 1 {
                return Err(Error::PreconditionFailed(format!(
                    "max b_i = {} exceeds n - 1 = {}",
                    b.max_value(),
                    n - 1
                )));
            }
            Ok(())
        }
        ClassSpec::Multigraphic { a, r } => degree_cap(a, *r),
        ClassSpec::Graphic { a } => degree_cap(a, 1),
        ClassSpec::Imbalance { .. } => Err(Error::UnsupportedClass(ClassTag::Imbalance)),
    }
}

fn degree_cap(a: &IntSeq, r: u64) -> Result<()> {
    let cap = r * (a.len() as u64).saturating_sub(1);
    if a.max_value() > cap {
        return Err(Error::PreconditionFailed(format!(
            "max a_i = {} exceeds r·(n - 1) = {cap}",
            a.max_value()
        )));
    }
    Ok(())
}

fn from_prefix(prefix: impl Iterator<Item = Sum>) -> IntSeq {
    let mut prev = 0;
    IntSeq::from_vec_unchecked(
        prefix
            .map(|p| {
                let v = p - prev;
                debug_assert!(v >= 0, "closed-form prefix sums must be nondecreasing");
                prev = p;
                v as u64
            })
            .collect(),
    )
}

fn min_sum(x: Sum, values: &[u64]) -> Sum {
    values.iter().map(|&v| x.min(v as Sum)).sum()
}

/// `Σ_{i≤k} x_i` of the class's generalized conjugate, for one `k`, by the
/// closed form. The caller has already checked existence.
fn conjugate_prefix(spec: &ClassSpec, k: usize) -> Sum {
    let ks = k as Sum;
    match spec {
        ClassSpec::Bigraphic { b, .. } => min_sum(ks, b.as_slice()),
        ClassSpec::BipartiteMulti { b, r, .. } => min_sum(*r as Sum * ks, b.as_slice()),
        ClassSpec::StructuredBipartite { b, mask, .. } => {
            let n = mask.cols();
            (1..=mask.rows())
                .map(|i| {
                    let bi = b.get(i) as Sum;
                    match mask.polarity() {
                        Polarity::Fill => {
                            let forced_after = (k + 1..=n).filter(|&j| mask.get(i, j)).count();
                            ks.min(bi - forced_after as Sum)
                        }
                        Polarity::Avoid => {
                            let forbidden_upto = (1..=k).filter(|&j| mask.get(i, j)).count();
                            (ks - forbidden_upto as Sum).min(bi)
                        }
                    }
                })
                .sum()
        }
        ClassSpec::Digraphic { b, .. } => split_min_sum(b.as_slice(), k, ks - 1, ks),
        ClassSpec::Multigraphic { a, r } => {
            let r = *r as Sum;
            split_min_sum(a.as_slice(), k, r * (ks - 1), r * ks)
        }
        ClassSpec::Graphic { a } => split_min_sum(a.as_slice(), k, ks - 1, ks),
        ClassSpec::Tournament { a } => {
            let n = a.len() as Sum;
            binom2(n) - binom2(n - ks)
        }
        ClassSpec::Imbalance { .. } => unreachable!("rejected by check_existence"),
    }
}

/// `Σ_{i≤k} head ∧ v_i + Σ_{i>k} tail ∧ v_i`.
pub(crate) fn split_min_sum(values: &[u64], k: usize, head: Sum, tail: Sum) -> Sum {
    let k = k.min(values.len());
    min_sum(head, &values[..k]) + min_sum(tail, &values[k..])
}

pub(crate) fn binom2(x: Sum) -> Sum {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

/// Corrected conjugate `a^E_k = #{i < k : a_i ≥ k-1} + #{i > k : a_i ≥ k}`.
pub fn corrected_conjugate(a: &IntSeq) -> IntSeq {
    let n = a.len();
    let out = (1..=n)
        .map(|k| {
            let before = (1..k).filter(|&i| a.get(i) + 1 >= k as u64).count();
            let after = (k + 1..=n).filter(|&i| a.get(i) >= k as u64).count();
            (before + after) as u64
        })
        .collect();
    IntSeq::from_vec_unchecked(out)
}

/// Length-`n` generalized conjugate of the class, by closed form.
pub fn class_conjugate(spec: &ClassSpec) -> Result<IntSeq> {
    check_existence(spec)?;
    let n = spec.n();
    Ok(match spec {
        ClassSpec::Bigraphic { b, .. } => conjugate(b, n),
        ClassSpec::Graphic { a } => corrected_conjugate(a),
        ClassSpec::Tournament { .. } => {
            IntSeq::from_vec_unchecked((1..=n).map(|k| (n - k) as u64).collect())
        }
        _ => from_prefix((1..=n).map(|k| conjugate_prefix(spec, k))),
    })
}

/// Per-cell bounds `[lo, hi]` for the row-constrained classes.
fn cell_bounds(spec: &ClassSpec, i: usize, j: usize) -> (u64, u64) {
    match spec {
        ClassSpec::Bigraphic { .. } => (0, 1),
        ClassSpec::BipartiteMulti { r, .. } => (0, *r),
        ClassSpec::StructuredBipartite { mask, .. } => match (mask.polarity(), mask.get(i, j)) {
            (Polarity::Fill, true) => (1, 1),
            (Polarity::Avoid, true) => (0, 0),
            _ => (0, 1),
        },
        ClassSpec::Digraphic { .. } | ClassSpec::Graphic { .. } => (0, (i != j) as u64),
        ClassSpec::Multigraphic { r, .. } => (0, if i != j { *r } else { 0 }),
        ClassSpec::Tournament { .. } | ClassSpec::Imbalance { .. } => unreachable!(),
    }
}

/// Row sums and row count of the class's matrix set.
fn row_targets(spec: &ClassSpec) -> &IntSeq {
    match spec {
        ClassSpec::Bigraphic { b, .. }
        | ClassSpec::BipartiteMulti { b, .. }
        | ClassSpec::StructuredBipartite { b, .. }
        | ClassSpec::Digraphic { b, .. } => b,
        ClassSpec::Multigraphic { a, .. } | ClassSpec::Graphic { a } => a,
        ClassSpec::Tournament { .. } | ClassSpec::Imbalance { .. } => unreachable!(),
    }
}

/// The dominance-maximal matrix of the class.
///
/// Apart from tournaments, every class constrains rows only, so `S` is a
/// product of per-row sets and the maximal element puts each row's mass as
/// far left as its cell bounds allow. Columns are filled left to right; a
/// cell receives `min(hi, remaining - Σ lo of later cells)`.
pub fn maximal_matrix(spec: &ClassSpec) -> Result<IntMatrix> {
    check_existence(spec)?;
    let n = spec.n();
    if let ClassSpec::Tournament { .. } = spec {
        let entries = (0..n * n).map(|x| (x / n > x % n) as u64).collect();
        return Ok(IntMatrix::from_entries(n, n, entries));
    }
    let targets = row_targets(spec);
    let m = targets.len();
    let mut entries = Vec::with_capacity(m * n);
    for i in 1..=m {
        let bounds: Vec<(u64, u64)> = (1..=n).map(|j| cell_bounds(spec, i, j)).collect();
        let mut reserved: u64 = bounds.iter().map(|&(lo, _)| lo).sum();
        let mut remaining = targets.get(i);
        if remaining < reserved {
            return Err(Error::PreconditionFailed(format!(
                "row {i} needs {reserved} forced entries but its sum is {remaining}"
            )));
        }
        for &(lo, hi) in &bounds {
            reserved -= lo;
            let v = hi.min(remaining - reserved).max(lo);
            remaining -= v;
            entries.push(v);
        }
        if remaining > 0 {
            return Err(Error::PreconditionFailed(format!(
                "row {i} cannot reach its sum {} within the cell bounds",
                targets.get(i)
            )));
        }
    }
    Ok(IntMatrix::from_entries(m, n, entries))
}
