//! How many inequalities each mode evaluates over all graphic candidates.

use degseq::criteria::inequality_counts;
use degseq::genconj::ClassSpec;
use degseq::seqcore::IntSeq;

fn candidates(n: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<IntSeq>) {
    if cur.len() == n {
        out.push(IntSeq::new(cur.clone()).unwrap());
        return;
    }
    let top = cur.last().copied().unwrap_or(cap);
    for v in (0..=top).rev() {
        cur.push(v);
        candidates(n, cap, cur, out);
        cur.pop();
    }
}

fn main() -> degseq::Result<()> {
    println!("{:>3} {:>8} {:>10} {:>10} {:>10}", "n", "seqs", "full", "corners", "reduced");
    for n in 2..=12 {
        let mut seqs = Vec::new();
        candidates(n, n as u64 - 1, &mut Vec::new(), &mut seqs);
        let (mut f, mut c, mut r) = (0, 0, 0);
        for a in &seqs {
            let counts = inequality_counts(&ClassSpec::Graphic { a: a.clone() })?;
            f += counts.full;
            c += counts.corners;
            r += counts.reduced;
        }
        println!("{n:>3} {:>8} {f:>10} {c:>10} {r:>10}", seqs.len());
    }
    Ok(())
}
