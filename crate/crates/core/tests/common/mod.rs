//! Exhaustive input grids shared by the integration tests.
#![allow(dead_code)]

use degseq::genconj::{ClassSpec, Polarity, StructureMask};
use degseq::seqcore::{IntSeq, SignedSeq};

pub fn seq(v: &[u64]) -> IntSeq {
    IntSeq::new(v.to_vec()).unwrap()
}

/// Every nonincreasing sequence of length `n` with entries in `lo..=hi`.
pub fn nonincreasing_i64(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, lo: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=cap {
            cur.push(v);
            go(n, lo, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

pub fn nonincreasing(n: usize, hi: u64) -> Vec<IntSeq> {
    nonincreasing_i64(n, 0, hi as i64)
        .into_iter()
        .map(|v| IntSeq::new(v.into_iter().map(|x| x as u64).collect()).unwrap())
        .collect()
}

/// Every sequence of length `n` with entries in `0..=hi`.
pub fn all_sequences(n: usize, hi: u64) -> Vec<IntSeq> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|v| IntSeq::new(v).unwrap()).collect()
}

/// Masks of shape `m × n` with at most one marked cell per column.
pub fn one_per_column_masks(m: usize, n: usize, polarity: Polarity) -> Vec<StructureMask> {
    let mut out = Vec::new();
    let choices = (m + 1).pow(n as u32);
    for code in 0..choices {
        let mut cells = vec![false; m * n];
        let mut c = code;
        for j in 0..n {
            let pick = c % (m + 1);
            c /= m + 1;
            if pick > 0 {
                cells[(pick - 1) * n + j] = true;
            }
        }
        out.push(StructureMask::new(m, n, cells, polarity).unwrap());
    }
    out
}

/// Graphic and multigraphic (r = 1..=3) specs: n ≤ 6, entries ≤ 5.
pub fn degree_grid() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for a in nonincreasing(n, 5) {
            out.push(ClassSpec::Graphic { a: a.clone() });
            for r in 1..=3 {
                out.push(ClassSpec::Multigraphic { a: a.clone(), r });
            }
        }
    }
    out
}

/// Graphic specs only: n ≤ 6, entries ≤ 5.
pub fn graphic_grid() -> Vec<IntSeq> {
    (1..=6).flat_map(|n| nonincreasing(n, 5)).collect()
}

/// Tournament specs with matching total: n ≤ 6, entries ≤ 5.
pub fn tournament_grid() -> Vec<ClassSpec> {
    (1..=6)
        .flat_map(|n| nonincreasing(n, 5))
        .filter(|a| a.total() == (a.len() * (a.len() - 1) / 2) as i128)
        .map(|a| ClassSpec::Tournament { a })
        .collect()
}

/// Imbalance specs: nonincreasing d, n ≤ 5, |d_i| ≤ 3, Σd = 0.
pub fn imbalance_grid() -> Vec<ClassSpec> {
    (1..=5)
        .flat_map(|n| nonincreasing_i64(n, -3, 3))
        .filter(|d| d.iter().sum::<i64>() == 0)
        .map(|d| ClassSpec::Imbalance {
            d: SignedSeq::new(d).unwrap(),
        })
        .collect()
}

/// Bipartite pairs: a nonincreasing with n ≤ 4, any b with m ≤ 3, entries
/// ≤ 3, equal sums.
pub fn bipartite_pairs() -> Vec<(IntSeq, IntSeq)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for m in 1..=3 {
            let bs = all_sequences(m, 3);
            for a in nonincreasing(n, 3) {
                for b in bs.iter().filter(|b| b.total() == a.total()) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// Bigraphic, Berge (r ≤ 2) and structured specs over [`bipartite_pairs`],
/// the latter with every one-per-column mask valid for `b`, in both
/// polarities.
pub fn bipartite_grid() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for (a, b) in bipartite_pairs() {
        out.push(ClassSpec::Bigraphic {
            a: a.clone(),
            b: b.clone(),
        });
        for r in 1..=2 {
            out.push(ClassSpec::BipartiteMulti {
                a: a.clone(),
                b: b.clone(),
                r,
            });
        }
        if b.max_value() > a.len() as u64 {
            continue;
        }
        for polarity in [Polarity::Fill, Polarity::Avoid] {
            for mask in one_per_column_masks(b.len(), a.len(), polarity) {
                if mask.validate_for(&b).is_ok() {
                    out.push(ClassSpec::StructuredBipartite {
                        a: a.clone(),
                        b: b.clone(),
                        mask,
                    });
                }
            }
        }
    }
    out
}

/// Digraphic pairs: a nonincreasing, any b, n ≤ 4, entries ≤ 3, equal sums.
pub fn digraphic_grid() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let bs = all_sequences(n, 3);
        for a in nonincreasing(n, 3) {
            for b in bs.iter().filter(|b| b.total() == a.total()) {
                out.push(ClassSpec::Digraphic {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    out
}

/// Every grid above.
pub fn all_grids() -> Vec<ClassSpec> {
    let mut out = degree_grid();
    out.extend(tournament_grid());
    out.extend(imbalance_grid());
    out.extend(bipartite_grid());
    out.extend(digraphic_grid());
    out
}
