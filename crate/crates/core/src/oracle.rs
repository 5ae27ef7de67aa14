//! Exhaustive realizers used as ground truth for the criteria.
//!
//! Every search walks matrix cells in row-major order, tries the smallest
//! value first and abandons a branch as soon as some row or column quota can
//! no longer be met by the cells that remain. Witnesses are therefore
//! deterministic.
//!
//! Witness matrices use these conventions:
//!
//! * bipartite classes: `m × n`, row sums `b`, column sums `a`;
//! * digraphs: adjacency matrix, entry `(i, j)` is the arc `i → j`, row sums
//!   `a` (out-degrees), column sums `b` (in-degrees);
//! * imbalance: adjacency matrix of an oriented graph, row minus column sums `d`;
//! * graphs and multigraphs: symmetric adjacency matrix with zero diagonal;
//! * tournaments: entry `(i, j)` is 1 iff `i` beats `j`.

use std::env;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genconj::{ClassSpec, ClassTag, IntMatrix, Polarity};
use crate::seqcore::{majorization, IntSeq};

pub const BUDGET_ENV: &str = "DEGSEQ_ORACLE_BUDGET";

/// Size caps beyond which [`realize_with`] refuses to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// `m · n` for the bipartite classes.
    pub bipartite_cells: usize,
    /// Largest multiplicity `r`.
    pub max_entry: u64,
    /// `n` for digraphs, imbalance, graphs and multigraphs.
    pub square_n: usize,
    pub tournament_n: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            bipartite_cells: 30,
            max_entry: 3,
            square_n: 6,
            tournament_n: 7,
        }
    }
}

impl OracleBudget {
    /// Parses `key=value` pairs separated by commas, applied on top of the
    /// defaults, e.g. `square_n=7,tournament_n=8`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut budget = Self::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = |reason: String| Error::InvalidParameter {
                name: "oracle budget",
                reason,
            };
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {part:?}")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("{value:?} is not a nonnegative integer")))?;
            match key.trim() {
                "bipartite_cells" => budget.bipartite_cells = value as usize,
                "max_entry" => budget.max_entry = value,
                "square_n" => budget.square_n = value as usize,
                "tournament_n" => budget.tournament_n = value as usize,
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        Ok(budget)
    }

    /// The defaults, overridden by `DEGSEQ_ORACLE_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match env::var(BUDGET_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }

    fn admit(&self, spec: &ClassSpec) -> Result<()> {
        let exceeded = |what: String| Err(Error::BudgetExceeded(what));
        if spec.r() > self.max_entry {
            return exceeded(format!("r = {} exceeds max_entry = {}", spec.r(), self.max_entry));
        }
        match spec {
            ClassSpec::Bigraphic { a, b }
            | ClassSpec::BipartiteMulti { a, b, .. }
            | ClassSpec::StructuredBipartite { a, b, .. } => {
                let cells = a.len() * b.len();
                if cells > self.bipartite_cells {
                    return exceeded(format!(
                        "{cells} cells exceed bipartite_cells = {}",
                        self.bipartite_cells
                    ));
                }
            }
            ClassSpec::Tournament { a } => {
                if a.len() > self.tournament_n {
                    return exceeded(format!(
                        "n = {} exceeds tournament_n = {}",
                        a.len(),
                        self.tournament_n
                    ));
                }
            }
            _ => {
                if spec.n() > self.square_n {
                    return exceeded(format!(
                        "n = {} exceeds square_n = {}",
                        spec.n(),
                        self.square_n
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub class_tag: ClassTag,
    pub matrix: IntMatrix,
}

/// Searches for a realization within the default budget.
pub fn realize(spec: &ClassSpec) -> Result<Option<Witness>> {
    realize_with(spec, &OracleBudget::default())
}

pub fn realize_with(spec: &ClassSpec, budget: &OracleBudget) -> Result<Option<Witness>> {
    spec.validate_shape()?;
    budget.admit(spec)?;
    let matrix = match spec {
        ClassSpec::Bigraphic { a, b } => {
            BoxSearch::new(b.as_slice(), a.as_slice(), |_, _| (0, 1)).run()
        }
        ClassSpec::BipartiteMulti { a, b, r } => {
            BoxSearch::new(b.as_slice(), a.as_slice(), |_, _| (0, *r)).run()
        }
        ClassSpec::StructuredBipartite { a, b, mask } => {
            BoxSearch::new(b.as_slice(), a.as_slice(), |i, j| {
                match (mask.polarity(), mask.get(i + 1, j + 1)) {
                    (Polarity::Fill, true) => (1, 1),
                    (Polarity::Avoid, true) => (0, 0),
                    _ => (0, 1),
                }
            })
            .run()
        }
        ClassSpec::Digraphic { a, b } => {
            BoxSearch::new(a.as_slice(), b.as_slice(), |i, j| (0, (i != j) as u64)).run()
        }
        ClassSpec::Multigraphic { a, r } => symmetric(a.as_slice(), *r),
        ClassSpec::Graphic { a } => symmetric(a.as_slice(), 1),
        ClassSpec::Tournament { a } => tournament(a.as_slice()),
        ClassSpec::Imbalance { d } => oriented(d.as_slice()),
    };
    Ok(matrix.map(|matrix| Witness {
        class_tag: spec.tag(),
        matrix,
    }))
}

/// Row- and column-sum search over a box of per-cell bounds.
struct BoxSearch {
    m: usize,
    n: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
    /// Σ of `lo`/`hi` over cells `(i, j+1..n)`, indexed `i * (n+1) + j`.
    row_lo: Vec<u64>,
    row_hi: Vec<u64>,
    /// Σ of `lo`/`hi` over cells `(i+1..m, j)`, indexed `i * n + j`.
    col_lo: Vec<u64>,
    col_hi: Vec<u64>,
    row_rem: Vec<i128>,
    col_rem: Vec<i128>,
    cells: Vec<u64>,
}

impl BoxSearch {
    fn new(rows: &[u64], cols: &[u64], bounds: impl Fn(usize, usize) -> (u64, u64)) -> Self {
        let (m, n) = (rows.len(), cols.len());
        let mut lo = vec![0; m * n];
        let mut hi = vec![0; m * n];
        for i in 0..m {
            for j in 0..n {
                (lo[i * n + j], hi[i * n + j]) = bounds(i, j);
            }
        }
        let mut row_lo = vec![0; m * (n + 1)];
        let mut row_hi = vec![0; m * (n + 1)];
        for i in 0..m {
            for j in (0..n).rev() {
                row_lo[i * (n + 1) + j] = row_lo[i * (n + 1) + j + 1] + lo[i * n + j];
                row_hi[i * (n + 1) + j] = row_hi[i * (n + 1) + j + 1] + hi[i * n + j];
            }
        }
        let mut col_lo = vec![0; m * n];
        let mut col_hi = vec![0; m * n];
        for i in (0..m.saturating_sub(1)).rev() {
            for j in 0..n {
                col_lo[i * n + j] = col_lo[(i + 1) * n + j] + lo[(i + 1) * n + j];
                col_hi[i * n + j] = col_hi[(i + 1) * n + j] + hi[(i + 1) * n + j];
            }
        }
        Self {
            m,
            n,
            lo,
            hi,
            row_lo,
            row_hi,
            col_lo,
            col_hi,
            row_rem: rows.iter().map(|&v| v as i128).collect(),
            col_rem: cols.iter().map(|&v| v as i128).collect(),
            cells: vec![0; m * n],
        }
    }

    fn run(mut self) -> Option<IntMatrix> {
        let total_rows: i128 = self.row_rem.iter().sum();
        let total_cols: i128 = self.col_rem.iter().sum();
        if total_rows != total_cols {
            return None;
        }
        if self.m == 0 || self.n == 0 {
            return (total_rows == 0).then(|| IntMatrix::from_entries(self.m, self.n, Vec::new()));
        }
        let feasible_start = (0..self.m).all(|i| {
            let r = self.row_rem[i];
            r >= self.row_lo[i * (self.n + 1)] as i128 && r <= self.row_hi[i * (self.n + 1)] as i128
        });
        if feasible_start && self.step(0) {
            Some(IntMatrix::from_entries(self.m, self.n, self.cells))
        } else {
            None
        }
    }

    fn step(&mut self, cell: usize) -> bool {
        if cell == self.m * self.n {
            return self.col_rem.iter().all(|&c| c == 0);
        }
        let (i, j) = (cell / self.n, cell % self.n);
        // Column j's quota must be covered by this cell plus the rows below.
        let below_lo = self.col_lo[cell] as i128;
        let below_hi = self.col_hi[cell] as i128;
        let after_lo = self.row_lo[i * (self.n + 1) + j + 1] as i128;
        let after_hi = self.row_hi[i * (self.n + 1) + j + 1] as i128;
        for v in self.lo[cell]..=self.hi[cell] {
            let x = v as i128;
            let row_left = self.row_rem[i] - x;
            let col_left = self.col_rem[j] - x;
            if row_left < after_lo || col_left < below_lo {
                break;
            }
            if row_left > after_hi || col_left > below_hi {
                continue;
            }
            self.row_rem[i] = row_left;
            self.col_rem[j] = col_left;
            self.cells[cell] = v;
            if self.step(cell + 1) {
                return true;
            }
            self.row_rem[i] += x;
            self.col_rem[j] += x;
        }
        self.cells[cell] = 0;
        false
    }
}

/// Upper-triangle pairs `(i, j)`, `i < j`, in row-major order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// `(Δrem_i, Δrem_j, a_ij, a_ji)` choices for the pair `(i, j)`.
type PairOptions<S> = dyn Fn(&S, usize, usize) -> Vec<(i128, i128, u64, u64)>;

struct PairSearch<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// Undecided pairs touching each vertex.
    open: Vec<u64>,
    decided: Vec<bool>,
    rem: Vec<i128>,
    cells: Vec<u64>,
    /// Feasibility of vertex `v` given the search state.
    feasible: &'a dyn Fn(&PairSearch<'a>, usize) -> bool,
}

impl<'a> PairSearch<'a> {
    fn new(targets: Vec<i128>, feasible: &'a dyn Fn(&PairSearch<'a>, usize) -> bool) -> Self {
        let n = targets.len();
        Self {
            n,
            pairs: pairs(n),
            open: vec![n.saturating_sub(1) as u64; n],
            decided: vec![false; n * n],
            rem: targets,
            cells: vec![0; n * n],
            feasible,
        }
    }

    fn ok(&self) -> bool {
        (0..self.n).all(|v| (self.feasible)(self, v))
    }

    /// Tries each `(Δrem_i, Δrem_j, a_ij, a_ji)` option in order.
    fn step(&mut self, p: usize, options: &PairOptions<Self>) -> bool {
        if p == self.pairs.len() {
            return self.rem.iter().all(|&x| x == 0);
        }
        let (i, j) = self.pairs[p];
        self.open[i] -= 1;
        self.open[j] -= 1;
        self.decided[i * self.n + j] = true;
        self.decided[j * self.n + i] = true;
        for (di, dj, aij, aji) in options(self, i, j) {
            self.rem[i] -= di;
            self.rem[j] -= dj;
            if (self.feasible)(self, i) && (self.feasible)(self, j) {
                self.cells[i * self.n + j] = aij;
                self.cells[j * self.n + i] = aji;
                if self.step(p + 1, options) {
                    return true;
                }
            }
            self.rem[i] += di;
            self.rem[j] += dj;
        }
        self.cells[i * self.n + j] = 0;
        self.cells[j * self.n + i] = 0;
        self.open[i] += 1;
        self.open[j] += 1;
        self.decided[i * self.n + j] = false;
        self.decided[j * self.n + i] = false;
        false
    }

    fn run(mut self, options: &PairOptions<Self>) -> Option<IntMatrix> {
        if self.ok() && self.step(0, options) {
            Some(IntMatrix::from_entries(self.n, self.n, self.cells))
        } else {
            None
        }
    }
}

fn symmetric(a: &[u64], r: u64) -> Option<IntMatrix> {
    if a.iter().map(|&v| v as i128).sum::<i128>() % 2 != 0 {
        return None;
    }
    // A vertex's remaining degree must fit into its open pairs, each capped
    // by r and by the partner's remaining degree.
    let feasible = move |s: &PairSearch, v: usize| {
        let need = s.rem[v];
        if need < 0 {
            return false;
        }
        if need > (r * s.open[v]) as i128 {
            return false;
        }
        let reach: i128 = (0..s.n)
            .filter(|&u| u != v && !s.decided[u * s.n + v])
            .map(|u| s.rem[u].clamp(0, r as i128))
            .sum();
        need <= reach
    };
    let options = move |s: &PairSearch, i: usize, j: usize| {
        let cap = (r as i128).min(s.rem[i]).min(s.rem[j]);
        (0..=cap).map(|x| (x, x, x as u64, x as u64)).collect()
    };
    PairSearch::new(a.iter().map(|&v| v as i128).collect(), &feasible).run(&options)
}

fn tournament(a: &[u64]) -> Option<IntMatrix> {
    let feasible = |s: &PairSearch, v: usize| s.rem[v] >= 0 && s.rem[v] <= s.open[v] as i128;
    // a_ij = 0 (j beats i) before a_ij = 1.
    let options = |_: &PairSearch, _: usize, _: usize| vec![(0, 1, 0, 1), (1, 0, 1, 0)];
    PairSearch::new(a.iter().map(|&v| v as i128).collect(), &feasible).run(&options)
}

fn oriented(d: &[i64]) -> Option<IntMatrix> {
    let feasible = |s: &PairSearch, v: usize| s.rem[v].abs() <= s.open[v] as i128;
    // (a_ij, a_ji) in lexicographic order: none, j → i, i → j.
    let options = |_: &PairSearch, _: usize, _: usize| {
        vec![(0, 0, 0, 0), (-1, 1, 0, 1), (1, -1, 1, 0)]
    };
    PairSearch::new(d.iter().map(|&v| v as i128).collect(), &feasible).run(&options)
}

/// Checks every structural constraint of `spec`'s class against `w`,
/// independently of the search that produced it.
pub fn validate_witness(spec: &ClassSpec, w: &Witness) -> std::result::Result<(), String> {
    if w.class_tag != spec.tag() {
        return Err(format!("witness is tagged {}, spec is {}", w.class_tag, spec.tag()));
    }
    let mat = &w.matrix;
    let dims = |rows: usize, cols: usize| {
        if mat.rows() != rows || mat.cols() != cols {
            Err(format!("matrix is {}×{}, expected {rows}×{cols}", mat.rows(), mat.cols()))
        } else {
            Ok(())
        }
    };
    let sums = |what: &str, got: &IntSeq, want: &IntSeq| {
        if got != want {
            Err(format!("{what} sums are {got}, expected {want}"))
        } else {
            Ok(())
        }
    };
    let cells = |cap: &dyn Fn(usize, usize) -> (u64, u64)| {
        for i in 1..=mat.rows() {
            for j in 1..=mat.cols() {
                let (lo, hi) = cap(i, j);
                let v = mat.get(i, j);
                if v < lo || v > hi {
                    return Err(format!("entry ({i},{j}) = {v} outside [{lo},{hi}]"));
                }
            }
        }
        Ok(())
    };
    let n = spec.n();
    match spec {
        ClassSpec::Bigraphic { a, b } | ClassSpec::BipartiteMulti { a, b, .. } => {
            dims(b.len(), a.len())?;
            let r = spec.r();
            cells(&|_, _| (0, r))?;
            sums("row", mat.row_sums(), b)?;
            sums("column", mat.col_sums(), a)
        }
        ClassSpec::StructuredBipartite { a, b, mask } => {
            dims(b.len(), a.len())?;
            cells(&|i, j| match (mask.polarity(), mask.get(i, j)) {
                (Polarity::Fill, true) => (1, 1),
                (Polarity::Avoid, true) => (0, 0),
                _ => (0, 1),
            })?;
            sums("row", mat.row_sums(), b)?;
            sums("column", mat.col_sums(), a)
        }
        ClassSpec::Digraphic { a, b } => {
            dims(n, n)?;
            cells(&|i, j| (0, (i != j) as u64))?;
            sums("row", mat.row_sums(), a)?;
            sums("column", mat.col_sums(), b)
        }
        ClassSpec::Multigraphic { a, .. } | ClassSpec::Graphic { a } => {
            dims(n, n)?;
            let r = spec.r();
            cells(&|i, j| (0, if i == j { 0 } else { r }))?;
            for i in 1..=n {
                for j in i + 1..=n {
                    if mat.get(i, j) != mat.get(j, i) {
                        return Err(format!("matrix is not symmetric at ({i},{j})"));
                    }
                }
            }
            sums("row", mat.row_sums(), a)
        }
        ClassSpec::Tournament { a } => {
            dims(n, n)?;
            cells(&|_, _| (0, 1))?;
            for i in 1..=n {
                for j in i..=n {
                    let want = if i == j { 0 } else { 1 };
                    if mat.get(i, j) + mat.get(j, i) != want {
                        return Err(format!("A_ij + A_ji != [i != j] at ({i},{j})"));
                    }
                }
            }
            sums("row", mat.row_sums(), a)
        }
        ClassSpec::Imbalance { d } => {
            dims(n, n)?;
            cells(&|i, j| (0, (i != j) as u64))?;
            for i in 1..=n {
                for j in i + 1..=n {
                    if mat.get(i, j) + mat.get(j, i) > 1 {
                        return Err(format!("pair ({i},{j}) carries arcs both ways"));
                    }
                }
            }
            for i in 1..=n {
                let got = mat.row_sums().get(i) as i128 - mat.col_sums().get(i) as i128;
                if got != d.get(i) as i128 {
                    return Err(format!("vertex {i} has imbalance {got}, expected {}", d.get(i)));
                }
            }
            if d.total() != 0 {
                return Err(format!("Σd = {} is not zero", d.total()));
            }
            Ok(())
        }
    }
}

/// One step of the majorization lemma: if `a ⪯ b` are nonincreasing,
/// `j ≤ l`, `a_j > 0` and `b_l > 0`, then `a - e^j ⪯ b - e^l`.
///
/// The conclusion is recomputed on every call.
pub fn fulkerson_ryser_step(a: &IntSeq, b: &IntSeq, j: usize, l: usize) -> Result<(IntSeq, IntSeq)> {
    let fail = |msg: String| Err(Error::PreconditionFailed(msg));
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if !a.is_nonincreasing() {
        return fail("a is not nonincreasing".into());
    }
    if !b.is_nonincreasing() {
        return fail("b is not nonincreasing".into());
    }
    if !(1 <= j && j <= l && l <= n) {
        return fail(format!("need 1 ≤ j ≤ l ≤ n, got j={j}, l={l}, n={n}"));
    }
    if a.get(j) == 0 {
        return fail(format!("a_{j} = 0"));
    }
    if b.get(l) == 0 {
        return fail(format!("b_{l} = 0"));
    }
    if !majorization(a, b)? {
        return fail(format!("{a} is not majorized by {b}"));
    }
    let mut a2 = a.as_slice().to_vec();
    let mut b2 = b.as_slice().to_vec();
    a2[j - 1] -= 1;
    b2[l - 1] -= 1;
    let (a2, b2) = (IntSeq::new(a2)?, IntSeq::new(b2)?);
    assert!(
        majorization(&a2, &b2)?,
        "majorization lemma violated: {a2} vs {b2}"
    );
    Ok((a2, b2))
}
