//! Command-line front end.
//!
//! Every subcommand writes JSON to stdout by default (one document per
//! query, newline-delimited in batch mode) and human-readable text with
//! `--text`. Exit status: 0 realizable or success, 1 not realizable, 2 input
//! error, 3 oracle budget exceeded. A batch exits with the largest status
//! among its queries.

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::criteria::{check, inequality_counts, CheckMode, CriterionReport, Verdict};
use crate::error::Error;
use crate::genconj::{class_conjugate, maximal_matrix, ClassSpec, ClassTag, Polarity, StructureMask};
use crate::oracle::{realize, realize_with, OracleBudget};
use crate::seqcore::{conjugate, corners, weak_dominance, IntSeq, SignedSeq};

pub const EXIT_REALIZABLE: i32 = 0;
pub const EXIT_NOT_REALIZABLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

/// One query, as read from `--file` and emitted by `--echo`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDocument {
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    /// Vertex count, for conjugates that depend on `n` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Row-major 0/1 rows, `|b| × |a|`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarity: Option<Polarity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<CheckMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalize: Option<bool>,
}

/// Input problems, with the offending field.
#[derive(Debug)]
enum Failure {
    Field(&'static str, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit(&self) -> i32 {
        match self {
            Failure::Lib(Error::BudgetExceeded(_)) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Field(field, msg) => format!("field `{field}`: {msg}"),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn seq(field: &'static str, v: Vec<u64>) -> Outcome<IntSeq> {
    IntSeq::new(v).map_err(|e| Failure::Field(field, e.to_string()))
}

/// Which sequences a class reads.
fn fields_of(tag: ClassTag) -> &'static [&'static str] {
    match tag {
        ClassTag::Bigraphic | ClassTag::Digraphic => &["a", "b"],
        ClassTag::BipartiteMulti => &["a", "b", "r"],
        ClassTag::StructuredBipartite => &["a", "b", "mask", "polarity"],
        ClassTag::Imbalance => &["d"],
        ClassTag::Multigraphic => &["a", "r"],
        ClassTag::Graphic | ClassTag::Tournament => &["a"],
    }
}

impl QueryDocument {
    pub fn tag(&self) -> Option<ClassTag> {
        ClassTag::parse(&self.class)
    }

    fn present(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, here) in [
            ("a", self.a.is_some()),
            ("b", self.b.is_some()),
            ("d", self.d.is_some()),
            ("r", self.r.is_some()),
            ("mask", self.mask.is_some()),
            ("polarity", self.polarity.is_some()),
        ] {
            if here {
                out.push(name);
            }
        }
        out
    }

    /// Builds the spec, requiring exactly the fields the class reads. With
    /// `allow_order`, a missing `a` may be replaced by `n` (conjugates that
    /// only depend on the vertex count).
    fn to_spec(&self, allow_order: bool) -> Outcome<ClassSpec> {
        let tag = self.tag().ok_or_else(|| {
            let known: Vec<&str> = ClassTag::ALL.iter().map(|t| t.as_str()).collect();
            Failure::Field(
                "class",
                format!("unknown class {:?}; expected one of {}", self.class, known.join(", ")),
            )
        })?;
        let wanted = fields_of(tag);
        for field in self.present() {
            if !wanted.contains(&field) {
                return Err(Failure::Field(field, format!("not used by class {tag}")));
            }
        }
        if self.n.is_some() && !allow_order {
            return Err(Failure::Field("n", "only meaningful for `conjugate`".into()));
        }
        let order_only = matches!(
            tag,
            ClassTag::Bigraphic
                | ClassTag::BipartiteMulti
                | ClassTag::StructuredBipartite
                | ClassTag::Digraphic
                | ClassTag::Tournament
        );
        let a = match (&self.a, self.n) {
            (Some(a), None) => Some(seq("a", a.clone())?),
            (Some(_), Some(_)) => {
                return Err(Failure::Field("n", "give either `a` or `n`, not both".into()))
            }
            (None, Some(n)) if allow_order && order_only => Some(IntSeq::zeros(n)),
            (None, Some(_)) => {
                return Err(Failure::Field("n", format!("class {tag} needs `a` itself")))
            }
            (None, None) => None,
        };
        let need_a = || a.clone().ok_or_else(|| missing("a", tag));
        let need_b = || match &self.b {
            Some(b) => seq("b", b.clone()),
            None => Err(missing("b", tag)),
        };
        let need_r = || self.r.ok_or_else(|| missing("r", tag));
        Ok(match tag {
            ClassTag::Bigraphic => ClassSpec::Bigraphic {
                a: need_a()?,
                b: need_b()?,
            },
            ClassTag::BipartiteMulti => ClassSpec::BipartiteMulti {
                a: need_a()?,
                b: need_b()?,
                r: need_r()?,
            },
            ClassTag::StructuredBipartite => {
                let rows = self.mask.as_ref().ok_or_else(|| missing("mask", tag))?;
                let polarity = self.polarity.ok_or_else(|| missing("polarity", tag))?;
                let a = need_a()?;
                let b = need_b()?;
                let mask = if rows.is_empty() {
                    StructureMask::new(0, a.len(), Vec::new(), polarity)?
                } else {
                    StructureMask::from_rows(rows, polarity)?
                };
                ClassSpec::StructuredBipartite { a, b, mask }
            }
            ClassTag::Digraphic => ClassSpec::Digraphic {
                a: need_a()?,
                b: need_b()?,
            },
            ClassTag::Imbalance => {
                let d = self.d.clone().ok_or_else(|| missing("d", tag))?;
                ClassSpec::Imbalance {
                    d: SignedSeq::new(d).map_err(|e| Failure::Field("d", e.to_string()))?,
                }
            }
            ClassTag::Multigraphic => ClassSpec::Multigraphic {
                a: need_a()?,
                r: need_r()?,
            },
            ClassTag::Graphic => ClassSpec::Graphic { a: need_a()? },
            ClassTag::Tournament => ClassSpec::Tournament { a: need_a()? },
        })
    }

    /// Sorts the sequences descending (digraphic pairs jointly, by `a`
    /// then `b`). Refused for the structured class, whose mask is tied to
    /// the column order.
    fn normalized(&self) -> Outcome<QueryDocument> {
        let mut doc = self.clone();
        doc.normalize = None;
        if self.tag() == Some(ClassTag::StructuredBipartite) {
            return Err(Failure::Field(
                "normalize",
                "refused for structured_bipartite: the mask fixes which column each a_j belongs to, so sorting a would change the instance".into(),
            ));
        }
        if self.tag() == Some(ClassTag::Digraphic) {
            if let (Some(a), Some(b)) = (&self.a, &self.b) {
                if a.len() == b.len() {
                    let mut pairs: Vec<(u64, u64)> = a.iter().copied().zip(b.iter().copied()).collect();
                    pairs.sort_unstable_by(|x, y| y.cmp(x));
                    doc.a = Some(pairs.iter().map(|p| p.0).collect());
                    doc.b = Some(pairs.iter().map(|p| p.1).collect());
                }
            }
            return Ok(doc);
        }
        if let Some(a) = &mut doc.a {
            a.sort_unstable_by(|x, y| y.cmp(x));
        }
        if let Some(d) = &mut doc.d {
            d.sort_unstable_by(|x, y| y.cmp(x));
        }
        Ok(doc)
    }

    fn prepared(&self, allow_order: bool) -> Outcome<(QueryDocument, ClassSpec)> {
        let doc = if self.normalize == Some(true) {
            self.normalized()?
        } else {
            self.clone()
        };
        let spec = doc.to_spec(allow_order)?;
        Ok((doc, spec))
    }
}

fn missing(field: &'static str, tag: ClassTag) -> Failure {
    Failure::Field(field, format!("required by class {tag}"))
}

#[derive(Parser, Debug)]
#[command(name = "degseq", version, about = "Degree-sequence realizability checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide realizability and report the inequalities evaluated.
    Check(CheckArgs),
    /// Print the class's generalized conjugate.
    Conjugate(QueryArgs),
    /// Print C(a) and C(a').
    Corners(CornersArgs),
    /// Search for a realizing matrix within the oracle budget.
    Witness(QueryArgs),
    /// Inequality counts of Full, Corners and Reduced per query.
    Bench(BenchArgs),
    /// Run the structured-mask counterexample end to end.
    Regress36,
}

#[derive(Args, Debug, Default)]
struct QueryArgs {
    /// Class tag, e.g. graphic, bigraphic, tournament.
    #[arg(long)]
    class: Option<String>,
    /// Comma-separated degree sequence.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Comma-separated partner sequence.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Comma-separated imbalance sequence.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    /// Edge multiplicity bound.
    #[arg(long)]
    r: Option<u64>,
    /// Vertex count (conjugate only).
    #[arg(long)]
    n: Option<usize>,
    /// Mask rows separated by `;`, entries by `,`.
    #[arg(long)]
    mask: Option<String>,
    /// fill or avoid.
    #[arg(long)]
    polarity: Option<String>,
    /// Sort descending first (digraphic pairs jointly).
    #[arg(long)]
    normalize: bool,
    /// Human-readable output.
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    query: QueryArgs,
    /// full, corners, reduced, conjugate_form or auto.
    #[arg(long)]
    mode: Option<String>,
    /// Include the query document in the output.
    #[arg(long)]
    echo: bool,
    /// JSON array of query documents.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args, Debug)]
struct CornersArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long)]
    normalize: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// JSON array of query documents.
    #[arg(long, conflicts_with = "graphic_grid")]
    file: Option<String>,
    /// Benchmark every nonincreasing graphic candidate with n ≤ N.
    #[arg(long, value_name = "N")]
    graphic_grid: Option<usize>,
    /// Largest entry in the generated grid (defaults to N - 1).
    #[arg(long, requires = "graphic_grid")]
    max_entry: Option<u64>,
    #[arg(long)]
    text: bool,
}

fn list<T: std::str::FromStr>(field: &'static str, s: &str) -> Outcome<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Failure::Field(field, format!("{:?} is not a valid entry", x.trim())))
        })
        .collect()
}

fn parse_mask(s: &str) -> Outcome<Vec<Vec<u8>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(|row| list("mask", row)).collect()
}

fn parse_polarity(s: &str) -> Outcome<Polarity> {
    match s.trim() {
        "fill" => Ok(Polarity::Fill),
        "avoid" => Ok(Polarity::Avoid),
        other => Err(Failure::Field("polarity", format!("{other:?} is not fill or avoid"))),
    }
}

fn parse_mode(s: &str) -> Outcome<CheckMode> {
    CheckMode::parse(s.trim()).ok_or_else(|| {
        Failure::Field(
            "mode",
            format!("{s:?} is not one of full, corners, reduced, conjugate_form, auto"),
        )
    })
}

impl QueryArgs {
    fn document(&self, mode: Option<CheckMode>) -> Outcome<QueryDocument> {
        Ok(QueryDocument {
            class: self
                .class
                .clone()
                .ok_or_else(|| Failure::Field("class", "missing --class".into()))?,
            a: self.a.as_deref().map(|s| list("a", s)).transpose()?,
            b: self.b.as_deref().map(|s| list("b", s)).transpose()?,
            d: self.d.as_deref().map(|s| list("d", s)).transpose()?,
            r: self.r,
            n: self.n,
            mask: self.mask.as_deref().map(parse_mask).transpose()?,
            polarity: self.polarity.as_deref().map(parse_polarity).transpose()?,
            mode,
            normalize: self.normalize.then_some(true),
        })
    }
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Realizable => EXIT_REALIZABLE,
        Verdict::NotRealizable => EXIT_NOT_REALIZABLE,
    }
}

fn tuple<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = v.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn spec_text(spec: &ClassSpec) -> String {
    match spec {
        ClassSpec::Bigraphic { a, b }
        | ClassSpec::Digraphic { a, b }
        | ClassSpec::StructuredBipartite { a, b, .. } => format!("{} a={a} b={b}", spec.tag()),
        ClassSpec::BipartiteMulti { a, b, r } => format!("{} a={a} b={b} r={r}", spec.tag()),
        ClassSpec::Multigraphic { a, r } => format!("{} a={a} r={r}", spec.tag()),
        ClassSpec::Graphic { a } | ClassSpec::Tournament { a } => format!("{} a={a}", spec.tag()),
        ClassSpec::Imbalance { d } => format!("{} d={}", spec.tag(), tuple(d.as_slice().iter())),
    }
}

fn report_text(spec: &ClassSpec, r: &CriterionReport) -> String {
    let mut out = format!(
        "{} [{}]: {}\n",
        spec_text(spec),
        r.mode,
        match r.verdict {
            Verdict::Realizable => "realizable",
            Verdict::NotRealizable => "not realizable",
        }
    );
    if let Some(note) = &r.precondition_note {
        let _ = writeln!(out, "  precondition: {note}");
    }
    if let Some(name) = &r.shortcut {
        let _ = writeln!(out, "  shortcut: {name}");
    }
    for q in &r.checked {
        let j = q.conjugate_index.map(|j| format!(" (j={j})")).unwrap_or_default();
        let _ = writeln!(
            out,
            "  k={}{j}: {} {} {}",
            q.k,
            q.lhs,
            if q.holds() { "≤" } else { ">" },
            q.rhs
        );
    }
    out
}

/// Runs one check query; returns the exit status, one output document and
/// the diagnostic, if any.
fn check_one(doc: &QueryDocument, text: bool, echo: bool) -> (i32, String, Option<String>) {
    let result = doc.prepared(false).and_then(|(normalized, spec)| {
        let mode = normalized.mode.unwrap_or(CheckMode::Auto);
        let report = check(&spec, mode)?;
        Ok((spec, report))
    });
    match result {
        Ok((spec, report)) => {
            let exit = verdict_exit(report.verdict);
            let body = if text {
                let mut s = report_text(&spec, &report);
                if echo {
                    s.insert_str(0, &format!("query: {}\n", serde_json::to_string(doc).unwrap()));
                }
                s.trim_end().to_string()
            } else if echo {
                json!({ "query": doc, "report": report }).to_string()
            } else {
                serde_json::to_string(&report).unwrap()
            };
            (exit, body, None)
        }
        Err(f) => {
            let body = if text {
                format!("error: {}", f.message())
            } else {
                json!({ "error": f.message() }).to_string()
            };
            (f.exit(), body, Some(f.message()))
        }
    }
}

fn read_documents(path: &str) -> Outcome<Vec<QueryDocument>> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Field("file", format!("{path}: {e}")))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Field("file", format!("{path}: {e}")))
}

fn run_check(args: &CheckArgs) -> Outcome<CommandOutput> {
    let mode = args.mode.as_deref().map(parse_mode).transpose()?;
    let docs = match &args.file {
        Some(path) => {
            if args.query.class.is_some() {
                return Err(Failure::Field("file", "give either --file or inline flags".into()));
            }
            let mut docs = read_documents(path)?;
            if let Some(mode) = mode {
                for d in &mut docs {
                    d.mode.get_or_insert(mode);
                }
            }
            docs
        }
        None => vec![args.query.document(mode)?],
    };
    let results: Vec<(i32, String, Option<String>)> = docs
        .par_iter()
        .map(|doc| check_one(doc, args.query.text, args.echo))
        .collect();
    let exit = results.iter().map(|r| r.0).max().unwrap_or(EXIT_REALIZABLE);
    let (mut stdout, mut stderr) = (String::new(), String::new());
    for (i, (_, line, diagnostic)) in results.into_iter().enumerate() {
        stdout.push_str(&line);
        stdout.push('\n');
        if let Some(msg) = diagnostic {
            let _ = writeln!(stderr, "error: query {}: {msg}", i + 1);
        }
    }
    Ok(CommandOutput {
        exit,
        stdout,
        stderr,
    })
}

fn run_conjugate(args: &QueryArgs) -> Outcome<CommandOutput> {
    let (_, spec) = args.document(None)?.prepared(true)?;
    let conj = class_conjugate(&spec)?;
    let stdout = if args.text {
        format!("{conj}\n")
    } else {
        format!("{}\n", json!({ "class": spec.tag(), "conjugate": conj.as_slice() }))
    };
    Ok(CommandOutput {
        exit: 0,
        stdout,
        stderr: String::new(),
    })
}

fn run_corners(args: &CornersArgs) -> Outcome<CommandOutput> {
    let mut values: Vec<u64> = list("a", &args.a)?;
    if args.normalize {
        values.sort_unstable_by(|x, y| y.cmp(x));
    }
    let a = seq("a", values)?;
    let ca = corners(&a)?;
    let ap = conjugate(&a, a.max_value() as usize);
    let cap = corners(&ap)?;
    let stdout = if args.text {
        format!("C(a) = {}\nC(a') = {} with a' = {ap}\n", tuple(&ca), tuple(&cap))
    } else {
        format!(
            "{}\n",
            json!({ "corners": ca, "conjugate": ap.as_slice(), "conjugate_corners": cap })
        )
    };
    Ok(CommandOutput {
        exit: 0,
        stdout,
        stderr: String::new(),
    })
}

fn run_witness(args: &QueryArgs) -> Outcome<CommandOutput> {
    let (_, spec) = args.document(None)?.prepared(false)?;
    let budget = OracleBudget::from_env()?;
    let found = realize_with(&spec, &budget)?;
    let exit = if found.is_some() {
        EXIT_REALIZABLE
    } else {
        EXIT_NOT_REALIZABLE
    };
    let stdout = match (&found, args.text) {
        (Some(w), true) => format!("{}", w.matrix),
        (None, true) => "none\n".to_string(),
        (Some(w), false) => format!("{}\n", serde_json::to_string(w).unwrap()),
        (None, false) => "\"none\"\n".to_string(),
    };
    Ok(CommandOutput {
        exit,
        stdout,
        stderr: String::new(),
    })
}

/// One bench row.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub class: ClassTag,
    pub n: usize,
    pub full: usize,
    pub corners: usize,
    pub reduced: usize,
    pub verdict: Verdict,
}

fn bench_row(doc: &QueryDocument) -> Outcome<BenchRow> {
    let (_, spec) = doc.prepared(false)?;
    let counts = inequality_counts(&spec)?;
    let report = check(&spec, CheckMode::Full)?;
    Ok(BenchRow {
        class: spec.tag(),
        n: spec.n(),
        full: counts.full,
        corners: counts.corners,
        reduced: counts.reduced,
        verdict: report.verdict,
    })
}

/// Every nonincreasing sequence with `1 ≤ n ≤ max_n` and entries `≤ max_entry`.
fn graphic_grid(max_n: usize, max_entry: u64) -> Vec<QueryDocument> {
    fn extend(cur: &mut Vec<u64>, cap: u64, left: usize, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            extend(cur, v, left - 1, out);
            cur.pop();
        }
    }
    let mut seqs = Vec::new();
    for n in 1..=max_n {
        extend(&mut Vec::new(), max_entry, n, &mut seqs);
    }
    seqs.into_iter()
        .map(|a| QueryDocument {
            class: "graphic".into(),
            a: Some(a),
            ..QueryDocument::default()
        })
        .collect()
}

fn run_bench(args: &BenchArgs) -> Outcome<CommandOutput> {
    let docs = match (&args.file, args.graphic_grid) {
        (Some(path), _) => read_documents(path)?,
        (None, Some(n)) => {
            if n > 10 {
                return Err(Failure::Field("graphic_grid", "at most 10".into()));
            }
            graphic_grid(n, args.max_entry.unwrap_or(n.saturating_sub(1) as u64))
        }
        (None, None) => {
            return Err(Failure::Field("file", "give --file or --graphic-grid".into()))
        }
    };
    let rows: Vec<Outcome<BenchRow>> = docs.par_iter().map(bench_row).collect();
    let mut stdout = String::new();
    let mut exit = EXIT_REALIZABLE;
    if args.text {
        let _ = writeln!(stdout, "{:<22} {:>4} {:>5} {:>8} {:>8}  verdict", "class", "n", "full", "corners", "reduced");
    }
    for (doc, row) in docs.iter().zip(rows) {
        match row {
            Ok(row) if args.text => {
                let _ = writeln!(
                    stdout,
                    "{:<22} {:>4} {:>5} {:>8} {:>8}  {}",
                    row.class.as_str(),
                    row.n,
                    row.full,
                    row.corners,
                    row.reduced,
                    match row.verdict {
                        Verdict::Realizable => "realizable",
                        Verdict::NotRealizable => "not realizable",
                    }
                );
            }
            Ok(row) => {
                let _ = writeln!(stdout, "{}", serde_json::to_string(&row).unwrap());
            }
            Err(f) => {
                exit = exit.max(f.exit());
                let _ = writeln!(stdout, "{}", json!({ "query": doc, "error": f.message() }));
            }
        }
    }
    Ok(CommandOutput {
        exit,
        stdout,
        stderr: String::new(),
    })
}

/// The structured-mask counterexample: corner inequalities hold, yet the
/// full dominance fails and no matrix exists.
fn run_regress() -> Outcome<CommandOutput> {
    let mask = StructureMask::from_rows(
        &[
            vec![1, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
        ],
        Polarity::Avoid,
    )?;
    let a = IntSeq::new(vec![2, 1, 1, 1])?;
    let spec = ClassSpec::StructuredBipartite {
        a: a.clone(),
        b: a.clone(),
        mask,
    };
    let conj = class_conjugate(&spec)?;
    let star = maximal_matrix(&spec)?;
    let (pa, pc) = (a.prefix_sums(), conj.prefix_sums());
    let cs = corners(&a)?;
    let corner_ok = cs.iter().all(|&k| pa[k] <= pc[k]);
    let dom = weak_dominance(&a, &conj);
    let witness = realize(&spec)?;
    let violation = dom.first_violation;
    let pass = conj.as_slice() == [2, 0, 2, 1]
        && star.to_rows() == vec![vec![0, 0, 1, 1], vec![0, 0, 1, 0], vec![1, 0, 0, 0], vec![1, 0, 0, 0]]
        && cs == vec![1, 4]
        && corner_ok
        && violation.map(|v| (v.k, v.lhs, v.rhs)) == Some((2, 3, 2))
        && witness.is_none();
    let mut stdout = String::new();
    let _ = writeln!(stdout, "{}", if pass { "PASS" } else { "FAIL" });
    let _ = writeln!(stdout, "b^C = {conj}");
    let _ = write!(stdout, "A* =\n{star}");
    let _ = writeln!(
        stdout,
        "corner inequalities at {}: {}",
        tuple(&cs),
        if corner_ok { "hold" } else { "fail" }
    );
    match violation {
        Some(v) => {
            let _ = writeln!(stdout, "violation at prefix k={} ({} > {})", v.k, v.lhs, v.rhs);
        }
        None => {
            let _ = writeln!(stdout, "no prefix violation");
        }
    }
    let _ = writeln!(
        stdout,
        "realizing matrix: {}",
        if witness.is_some() { "found" } else { "none" }
    );
    Ok(CommandOutput {
        exit: if pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return if informational {
                CommandOutput {
                    exit: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                CommandOutput {
                    exit: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Check(args) => run_check(args),
        Command::Conjugate(args) => run_conjugate(args),
        Command::Corners(args) => run_corners(args),
        Command::Witness(args) => run_witness(args),
        Command::Bench(args) => run_bench(args),
        Command::Regress36 => run_regress(),
    };
    result.unwrap_or_else(|f| CommandOutput {
        exit: f.exit(),
        stdout: String::new(),
        stderr: format!("error: {}\n", f.message()),
    })
}
