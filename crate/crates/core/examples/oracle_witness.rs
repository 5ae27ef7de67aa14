//! Brute-force witnesses, checked against their specs.

use degseq::genconj::ClassSpec;
use degseq::oracle::{realize, realize_with, validate_witness, OracleBudget};
use degseq::seqcore::{IntSeq, SignedSeq};

fn main() -> degseq::Result<()> {
    let seq = |v: &[u64]| IntSeq::new(v.to_vec());
    let specs = vec![
        ClassSpec::Bigraphic { a: seq(&[2, 2, 1])?, b: seq(&[3, 2])? },
        ClassSpec::Graphic { a: seq(&[3, 3, 2, 2, 2])? },
        ClassSpec::Graphic { a: seq(&[3, 3, 1, 1])? },
        ClassSpec::Tournament { a: seq(&[3, 2, 2, 2, 1])? },
        ClassSpec::Imbalance { d: SignedSeq::new(vec![2, 0, -1, -1])? },
    ];
    for spec in &specs {
        match realize(spec)? {
            Some(w) => {
                validate_witness(spec, &w).expect("oracle witness");
                println!("{:?}: {:?}", spec.tag(), w.matrix.to_rows());
            }
            None => println!("{:?}: no realization", spec.tag()),
        }
    }

    let big = ClassSpec::Tournament { a: seq(&[4, 4, 4, 4, 3, 3, 3, 3])? };
    println!("default budget, n=8: {:?}", realize(&big).err());
    let budget = OracleBudget { tournament_n: 8, ..OracleBudget::default() };
    println!("raised budget, n=8: found={}", realize_with(&big, &budget)?.is_some());
    Ok(())
}
