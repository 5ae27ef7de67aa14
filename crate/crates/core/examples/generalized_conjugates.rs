//! Class conjugates and the maximal matrices that attain them.

use degseq::genconj::{class_conjugate, maximal_matrix, ClassSpec, Polarity, StructureMask};
use degseq::seqcore::IntSeq;

fn show(label: &str, spec: &ClassSpec) -> degseq::Result<()> {
    let star = maximal_matrix(spec)?;
    println!("{label}: conjugate {}", class_conjugate(spec)?);
    for row in star.to_rows() {
        println!("    {row:?}");
    }
    Ok(())
}

fn main() -> degseq::Result<()> {
    let b = IntSeq::new(vec![3, 2, 2, 1])?;
    show("bigraphic", &ClassSpec::Bigraphic { a: IntSeq::zeros(4), b: b.clone() })?;
    show("bipartite r=2", &ClassSpec::BipartiteMulti { a: IntSeq::zeros(3), b: b.clone(), r: 2 })?;
    show("digraphic", &ClassSpec::Digraphic { a: IntSeq::zeros(4), b: b.clone() })?;
    show("graphic", &ClassSpec::Graphic { a: b.clone() })?;
    show("multigraphic r=2", &ClassSpec::Multigraphic { a: IntSeq::new(vec![4, 3, 3, 2])?, r: 2 })?;
    show("tournament", &ClassSpec::tournament_of_order(4))?;
    let mask = StructureMask::identity_avoid(4);
    show("structured (avoid diagonal)", &ClassSpec::StructuredBipartite { a: IntSeq::zeros(4), b, mask })?;
    let fill = StructureMask::from_rows(&[vec![0, 0, 1], vec![1, 0, 0]], Polarity::Fill)?;
    let b = IntSeq::new(vec![2, 2])?;
    show("structured (fill)", &ClassSpec::StructuredBipartite { a: IntSeq::zeros(3), b, mask: fill })
}
