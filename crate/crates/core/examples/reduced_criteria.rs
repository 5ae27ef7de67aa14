//! One query per class under every check mode.

use degseq::criteria::{check, CheckMode};
use degseq::genconj::ClassSpec;
use degseq::seqcore::{IntSeq, SignedSeq};

fn main() -> degseq::Result<()> {
    let seq = |v: &[u64]| IntSeq::new(v.to_vec());
    let specs = vec![
        ClassSpec::Bigraphic { a: seq(&[3, 3, 2, 1])?, b: seq(&[4, 3, 2])? },
        ClassSpec::BipartiteMulti { a: seq(&[4, 3, 1])?, b: seq(&[4, 4])?, r: 2 },
        ClassSpec::Digraphic { a: seq(&[2, 2, 1, 1])?, b: seq(&[2, 2, 1, 1])? },
        ClassSpec::Imbalance { d: SignedSeq::new(vec![3, 1, -1, -1, -2])? },
        ClassSpec::Multigraphic { a: seq(&[6, 3, 2, 1])?, r: 2 },
        ClassSpec::Graphic { a: seq(&[3, 3, 1, 1])? },
        ClassSpec::Tournament { a: seq(&[3, 2, 2, 2, 1])? },
    ];
    for spec in &specs {
        println!("{:?}", spec.tag());
        for mode in CheckMode::ALL {
            match check(spec, mode) {
                Ok(r) => {
                    let fail = r.failure.map(|f| format!(" fails at k={} ({} > {})", f.k, f.lhs, f.rhs));
                    println!("  {:<15} {:?} after {} rows{}", mode.as_str(), r.verdict, r.checked.len(), fail.unwrap_or_default());
                }
                Err(e) => println!("  {:<15} {e}", mode.as_str()),
            }
        }
    }
    Ok(())
}
