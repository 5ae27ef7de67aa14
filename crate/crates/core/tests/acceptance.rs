//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;
use degseq::criteria::{
    check, inequality_counts, sufficient_shortcut, CheckMode, Verdict,
};
use degseq::genconj::{class_conjugate, maximal_matrix, ClassSpec, IntMatrix, Polarity, StructureMask};
use degseq::oracle::{fulkerson_ryser_step, realize, validate_witness};
use degseq::seqcore::{
    concavity_class, conjugate, corners, majorization, weak_dominance, IntSeq, Sum,
};
use degseq::Error;

const RANDOM_CASES: usize = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    let mut detail = summary;
    if let Some(first) = failures.first() {
        detail.push_str(&format!(", {} failures, first: {first}", failures.len()));
    }
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

fn counterexample_regression() -> Outcome {
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
    let a = seq(&[2, 1, 1, 1]);
    let spec = ClassSpec::StructuredBipartite {
        a: a.clone(),
        b: a.clone(),
        mask,
    };
    let mut failures = Vec::new();
    let conj = class_conjugate(&spec).unwrap();
    if conj != seq(&[2, 0, 2, 1]) {
        failures.push(format!("conjugate {conj}"));
    }
    let expected = IntMatrix::from_rows(&[
        vec![0, 0, 1, 1],
        vec![0, 0, 1, 0],
        vec![1, 0, 0, 0],
        vec![1, 0, 0, 0],
    ]);
    if maximal_matrix(&spec).unwrap() != expected {
        failures.push("maximal matrix differs".into());
    }
    let (pa, pc) = (a.prefix_sums(), conj.prefix_sums());
    let cs = corners(&a).unwrap();
    if cs != vec![1, 4] || cs.iter().any(|&k| pa[k] > pc[k]) {
        failures.push(format!("corner inequalities at {cs:?}"));
    }
    let dom = weak_dominance(&a, &conj);
    match dom.first_violation {
        Some(v) if (v.k, v.lhs, v.rhs) == (2, 3, 2) => {}
        other => failures.push(format!("dominance violation {other:?}")),
    }
    if realize(&spec).unwrap().is_some() {
        failures.push("oracle found a matrix".into());
    }
    outcome(
        &failures,
        format!("conjugate {conj}, corners {cs:?}, first violation k=2 (3 > 2)"),
    )
}

fn verdict_modes(spec: &ClassSpec) -> Vec<(CheckMode, Verdict)> {
    [
        CheckMode::Full,
        CheckMode::Corners,
        CheckMode::Reduced,
        CheckMode::ConjugateForm,
        CheckMode::Auto,
    ]
    .into_iter()
    .filter_map(|mode| match check(spec, mode) {
        Ok(r) => Some((mode, r.verdict)),
        Err(Error::ConjugateFormUnavailable(_)) => None,
        Err(e) => panic!("{spec:?} in {mode}: {e}"),
    })
    .collect()
}

fn mode_equivalence(grid: &[ClassSpec]) -> Outcome {
    let failures: Vec<String> = grid
        .par_iter()
        .filter_map(|spec| {
            let v = verdict_modes(spec);
            v.iter()
                .any(|&(_, x)| x != v[0].1)
                .then(|| format!("{spec:?}: {v:?}"))
        })
        .collect();
    outcome(&failures, format!("{} specs", grid.len()))
}

fn oracle_agreement(grid: &[ClassSpec]) -> Outcome {
    let failures: Vec<String> = grid
        .par_iter()
        .filter_map(|spec| {
            let verdict = check(spec, CheckMode::Full).unwrap().verdict;
            let found = match realize(spec) {
                Ok(w) => w,
                Err(e) => return Some(format!("{spec:?}: {e}")),
            };
            if let Some(w) = &found {
                if let Err(e) = validate_witness(spec, w) {
                    return Some(format!("{spec:?}: invalid witness: {e}"));
                }
            }
            (found.is_some() != (verdict == Verdict::Realizable))
                .then(|| format!("{spec:?}: criterion {verdict:?}, oracle {}", found.is_some()))
        })
        .collect();
    outcome(&failures, format!("{} specs", grid.len()))
}

fn small_class_specs() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for m in 1..=4 {
            let bs = all_sequences(m, n as u64);
            for b in &bs {
                out.push(ClassSpec::Bigraphic {
                    a: IntSeq::zeros(n),
                    b: b.clone(),
                });
            }
            for b in all_sequences(m, 2 * n as u64) {
                out.push(ClassSpec::BipartiteMulti {
                    a: IntSeq::zeros(n),
                    b,
                    r: 2,
                });
            }
            for polarity in [Polarity::Fill, Polarity::Avoid] {
                for mask in one_per_column_masks(m, n, polarity) {
                    for b in bs.iter().filter(|b| mask.validate_for(b).is_ok()) {
                        out.push(ClassSpec::StructuredBipartite {
                            a: IntSeq::zeros(n),
                            b: b.clone(),
                            mask: mask.clone(),
                        });
                    }
                }
            }
        }
        for b in all_sequences(n, n as u64 - 1) {
            out.push(ClassSpec::Digraphic {
                a: IntSeq::zeros(n),
                b,
            });
        }
        for a in nonincreasing(n, 2 * (n as u64 - 1)) {
            if a.max_value() < n as u64 {
                out.push(ClassSpec::Graphic { a: a.clone() });
            }
            out.push(ClassSpec::Multigraphic { a, r: 2 });
        }
        out.push(ClassSpec::tournament_of_order(n));
    }
    out
}

fn conjugate_identities() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0usize;
    let mut multisets: Vec<IntSeq> = (0..=8).flat_map(|n| nonincreasing(n, 8)).collect();
    multisets.extend((1..=6).flat_map(|n| all_sequences(n, 6)).filter(|a| !a.is_nonincreasing()));
    for b in &multisets {
        count += 1;
        let top = b.max_value() as usize;
        let len = top.max(b.len());
        let bc = conjugate(b, len);
        if bc.total() != b.total() {
            failures.push(format!("sum of conjugate of {b}"));
        }
        if !b.is_nonincreasing() {
            continue;
        }
        if conjugate(&bc, b.len()) != *b {
            failures.push(format!("involution fails for {b}"));
        }
        let bt = conjugate(b, top);
        let left: Vec<(u64, u64)> = corners(b)
            .unwrap()
            .into_iter()
            .map(|k| (k as u64, b.get(k)))
            .collect();
        let mut right: Vec<(u64, u64)> = corners(&bt)
            .unwrap()
            .into_iter()
            .map(|j| (bt.get(j), j as u64))
            .collect();
        right.sort_unstable();
        if left != right {
            failures.push(format!("corner duality for {b}: {left:?} vs {right:?}"));
        }
        let mut values: Vec<u64> = bt.iter().filter(|&v| v > 0).collect();
        values.sort_unstable();
        values.dedup();
        let cs: Vec<u64> = corners(b).unwrap().into_iter().map(|k| k as u64).collect();
        if cs != values {
            failures.push(format!("corner set of {b} is not the conjugate's value set"));
        }
    }
    let specs = small_class_specs();
    for spec in &specs {
        let formula = class_conjugate(spec).unwrap();
        match maximal_matrix(spec) {
            Ok(mat) if *mat.col_sums() == formula => {}
            Ok(mat) => failures.push(format!("{spec:?}: {} vs {formula}", mat.col_sums())),
            Err(e) => failures.push(format!("{spec:?}: {e}")),
        }
    }
    outcome(
        &failures,
        format!("{count} sequences, {} class conjugates", specs.len()),
    )
}

fn random_nonincreasing(rng: &mut ChaCha8Rng, n: usize, hi: u64) -> IntSeq {
    let mut v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=hi)).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    IntSeq::new(v).unwrap()
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut failures = Vec::new();
    let mut tally = Vec::new();

    // Almost concave with nonnegative endpoints implies nonnegative.
    let mut accepted = 0;
    while accepted < RANDOM_CASES {
        let n = rng.gen_range(2..=12);
        let mut a = vec![rng.gen_range(0..=10i64)];
        let mut diff: i64 = rng.gen_range(-4..=6);
        let mut low = diff;
        for _ in 1..n {
            a.push(a[a.len() - 1] + diff);
            low = low.min(diff);
            diff = rng.gen_range(low - 3..=low + 1);
        }
        if a[n - 1] < 0 {
            continue;
        }
        if !concavity_class(&a).almost_concave {
            failures.push(format!("generator produced non-almost-concave {a:?}"));
        }
        accepted += 1;
        if a.iter().any(|&x| x < 0) {
            failures.push(format!("almost concave {a:?} has a negative entry"));
        }
    }
    tally.push(accepted);

    // Second differences ≤ 0 except one index where ≤ 1.
    accepted = 0;
    while accepted < RANDOM_CASES {
        let n = rng.gen_range(3..=12);
        let l = rng.gen_range(3..=n);
        let mut a = vec![rng.gen_range(0..=10i64)];
        let mut diff: i64 = rng.gen_range(-4..=8);
        a.push(a[0] + diff);
        for k in 3..=n {
            let bump = if k == l { 1 } else { 0 };
            diff += rng.gen_range(-3..=bump);
            a.push(a[k - 2] + diff);
        }
        if a[n - 1] < 0 {
            continue;
        }
        accepted += 1;
        if a.iter().any(|&x| x < 0) {
            failures.push(format!("{a:?} with one relaxed second difference has a negative entry"));
        }
    }
    tally.push(accepted);

    // Corner dominance implies full dominance against almost nonincreasing b.
    accepted = 0;
    while accepted < RANDOM_CASES {
        let n = rng.gen_range(1..=8);
        let a = random_nonincreasing(&mut rng, n, 6);
        let mut b = Vec::with_capacity(n);
        let mut low = u64::MAX;
        for _ in 0..n {
            let cap = if low == u64::MAX { 7 } else { low + 1 };
            let v = rng.gen_range(0..=cap);
            low = low.min(v);
            b.push(v);
        }
        let b = IntSeq::new(b).unwrap();
        if !b.to_signed().concavity().almost_nonincreasing {
            failures.push(format!("generator produced {b}"));
        }
        let (pa, pb) = (a.prefix_sums(), b.prefix_sums());
        if corners(&a).unwrap().iter().any(|&k| pa[k] > pb[k]) {
            continue;
        }
        accepted += 1;
        if !weak_dominance(&a, &b).holds {
            failures.push(format!("corner dominance of {a} by {b} does not extend"));
        }
    }
    tally.push(accepted);

    // Corner form and conjugate form agree for every cutoff.
    for _ in 0..RANDOM_CASES {
        let n = rng.gen_range(1..=8);
        let a = random_nonincreasing(&mut rng, n, 7);
        let b: Vec<u64> = (0..rng.gen_range(1..=9)).map(|_| rng.gen_range(0..=7)).collect();
        let b = IntSeq::new(b).unwrap();
        let l = rng.gen_range(0..=n + 1);
        let (pa, pb) = (a.prefix_sums(), b.prefix_sums());
        let pb_at = |k: usize| pb[k.min(b.len())];
        let first = corners(&a)
            .unwrap()
            .iter()
            .filter(|&&k| k <= l)
            .all(|&k| pa[k] <= pb_at(k));
        let ap = conjugate(&a, a.max_value() as usize);
        let second = corners(&ap).unwrap().iter().filter(|&&j| ap.get(j) as usize <= l).all(|&j| {
            let apj = ap.get(j) as Sum;
            let tail: Sum = (j + 1..=ap.len()).map(|i| ap.get(i) as Sum).sum();
            j as Sum * apj + tail <= pb_at(apj as usize)
        });
        if first != second {
            failures.push(format!("forms disagree for a={a}, b={b}, l={l}"));
        }
    }
    tally.push(RANDOM_CASES);

    // One unit removed from each side keeps majorization.
    accepted = 0;
    while accepted < RANDOM_CASES {
        let n = rng.gen_range(1..=8);
        let b = random_nonincreasing(&mut rng, n, 8);
        let mut a = b.as_slice().to_vec();
        for _ in 0..rng.gen_range(0..=6) {
            let (i, k) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a[i] >= a[k] + 2 {
                a[i] -= 1;
                a[k] += 1;
            }
        }
        a.sort_unstable_by(|x, y| y.cmp(x));
        let a = IntSeq::new(a).unwrap();
        let j = rng.gen_range(1..=n);
        let l = rng.gen_range(j..=n);
        if a.get(j) == 0 || b.get(l) == 0 {
            continue;
        }
        if !majorization(&a, &b).unwrap() {
            failures.push(format!("generator produced {a} not majorized by {b}"));
            continue;
        }
        accepted += 1;
        match fulkerson_ryser_step(&a, &b, j, l) {
            Ok((a2, b2)) if majorization(&a2, &b2).unwrap() => {}
            other => failures.push(format!("step on {a}, {b}, j={j}, l={l}: {other:?}")),
        }
    }
    tally.push(accepted);

    outcome(&failures, format!("instances per suite {tally:?}"))
}

fn shortcut_soundness(grid: &[ClassSpec]) -> Outcome {
    let results: Vec<(Option<&'static str>, Option<String>)> = grid
        .par_iter()
        .map(|spec| {
            let Some(sc) = sufficient_shortcut(spec) else {
                return (None, None);
            };
            let full = check(spec, CheckMode::Full).unwrap();
            if !full.is_realizable() {
                return (Some(sc.name), Some(format!("{spec:?}: {} fired, Full rejects", sc.name)));
            }
            match realize(spec) {
                Ok(Some(_)) => (Some(sc.name), None),
                Ok(None) => (Some(sc.name), Some(format!("{spec:?}: {} fired, no witness", sc.name))),
                Err(_) => (Some(sc.name), None),
            }
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|(_, f)| f.clone()).collect();
    let mut names: Vec<&str> = results.iter().filter_map(|(n, _)| *n).collect();
    let fired = names.len();
    names.sort_unstable();
    names.dedup();
    outcome(&failures, format!("{fired} firings across {names:?}"))
}

fn reduction_savings() -> Outcome {
    let grid = graphic_grid();
    let mut failures = Vec::new();
    let (mut reduced, mut corner, mut distinct) = (0usize, 0usize, 0usize);
    for a in &grid {
        let counts = inequality_counts(&ClassSpec::Graphic { a: a.clone() }).unwrap();
        let c = corners(a).unwrap().len();
        let mut values: Vec<u64> = a.iter().filter(|&v| v > 0).collect();
        values.dedup();
        if !(counts.reduced <= c && c <= values.len()) {
            failures.push(format!("{a}: reduced {}, corners {c}, values {}", counts.reduced, values.len()));
        }
        if !(counts.reduced <= counts.corners && counts.corners <= counts.full) {
            failures.push(format!("{a}: mode counts {counts:?}"));
        }
        reduced += counts.reduced;
        corner += c;
        distinct += values.len();
    }
    let len = grid.len() as f64;
    outcome(
        &failures,
        format!(
            "{} sequences, mean |Reduced| {:.3} ≤ mean |C(a)| {:.3} ≤ mean distinct {:.3}",
            grid.len(),
            reduced as f64 / len,
            corner as f64 / len,
            distinct as f64 / len
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let grid = all_grids();
    let criteria: Vec<Criterion> = vec![
        ("counterexample mask regression", Box::new(counterexample_regression)),
        ("mode equivalence", Box::new(|| mode_equivalence(&grid))),
        ("oracle agreement", Box::new(|| oracle_agreement(&grid))),
        ("conjugate identities", Box::new(conjugate_identities)),
        ("randomized property suites", Box::new(property_suites)),
        ("shortcut soundness", Box::new(|| shortcut_soundness(&grid))),
        ("reduction savings", Box::new(reduction_savings)),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        all &= result.pass;
        println!(
            "[{}] criterion {}: {name}: {} ({:.1}s)",
            if result.pass { "PASS" } else { "FAIL" },
            i + 1,
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
