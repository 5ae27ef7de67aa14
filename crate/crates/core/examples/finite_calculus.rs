//! Differences, concavity, conjugates and corners of a small sequence.

use degseq::seqcore::{conjugate, corners, density, majorization, weak_dominance, DensityKind, IntSeq};

fn main() -> degseq::Result<()> {
    let a = IntSeq::new(vec![5, 4, 4, 2, 1, 1])?;
    let signed = a.to_signed();
    println!("a        = {a}");
    println!("∇a       = {}", signed.backward_difference());
    println!("flags    = {:?}", signed.concavity());
    let ap = conjugate(&a, a.max_value() as usize);
    println!("a'       = {ap}");
    println!("C(a)     = {:?}", corners(&a)?);
    println!("C(a')    = {:?}", corners(&ap)?);
    println!("2-dense  = {}", density(&a, 2, DensityKind::Dense)?);
    println!("1-deep   = {}", density(&a, 1, DensityKind::Deep)?);

    let b = IntSeq::new(vec![6, 4, 3, 2, 2, 0])?;
    println!("a ≼ b    = {}", majorization(&a, &b)?);
    let dom = weak_dominance(&b, &a);
    println!("b ≤w a   = {} (first violation {:?})", dom.holds, dom.first_violation);
    Ok(())
}
