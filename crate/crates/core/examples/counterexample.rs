//! A two-by-two forbidden block breaks the corner shortcut for general masks.

use degseq::criteria::{check, CheckMode};
use degseq::genconj::{class_conjugate, ClassSpec, Polarity, StructureMask};
use degseq::oracle::realize;
use degseq::seqcore::{corners, IntSeq};

fn main() -> degseq::Result<()> {
    let rows = [vec![1, 1, 0, 0], vec![1, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 0]];
    let mask = StructureMask::from_rows(&rows, Polarity::Avoid)?;
    let a = IntSeq::new(vec![2, 1, 1, 1])?;
    let spec = ClassSpec::StructuredBipartite { a: a.clone(), b: a.clone(), mask: mask.clone() };

    println!("one per column: {}", mask.is_one_per_column());
    println!("b^C  = {}", class_conjugate(&spec)?);
    println!("C(a) = {:?}", corners(&a)?);
    let full = check(&spec, CheckMode::Full)?;
    println!("full: {:?} {:?}", full.verdict, full.failure);
    println!("corners: {}", check(&spec, CheckMode::Corners).unwrap_err());
    println!("witness: {:?}", realize(&spec)?.map(|w| w.matrix.to_rows()));
    Ok(())
}
