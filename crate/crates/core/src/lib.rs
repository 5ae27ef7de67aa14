//! Degree-sequence realizability for eight classes of graphs.
//!
//! Every class is decided by a family of prefix-sum inequalities of the form
//! `Σ_{i≤k} a_i ≤ Σ_{i≤k} b*_i`, where `b*` is a generalized conjugate: the
//! column sums of the unique dominance-maximal matrix in the class. The
//! [`criteria`] module evaluates those inequalities in several modes:
//!
//! * [`CheckMode::Full`](criteria::CheckMode::Full): every `k = 1..n`,
//! * [`CheckMode::Corners`](criteria::CheckMode::Corners): only where `a` strictly drops,
//! * [`CheckMode::Reduced`](criteria::CheckMode::Reduced): the smallest index set known to suffice,
//! * [`CheckMode::ConjugateForm`](criteria::CheckMode::ConjugateForm): the same
//!   inequalities restated over the conjugate `a'`,
//! * [`CheckMode::Auto`](criteria::CheckMode::Auto): sufficient-condition shortcuts, then `Reduced`.
//!
//! All modes agree in verdict. The [`oracle`] module decides the same questions
//! by exhaustive search and is used to validate every mode.
//!
//! Indices in every public API and report are 1-based.
//!
//! ```
//! use degseq::criteria::{check_graphic, CheckMode, Verdict};
//! use degseq::seqcore::IntSeq;
//!
//! let a = IntSeq::new(vec![3, 3, 1, 1]).unwrap();
//! let report = check_graphic(&a, CheckMode::Reduced).unwrap();
//! assert_eq!(report.verdict, Verdict::NotRealizable);
//! let failure = report.failure.unwrap();
//! assert_eq!((failure.k, failure.lhs, failure.rhs), (2, 6, 4));
//! ```


pub mod cli;
pub mod criteria;
pub mod error;
pub mod genconj;
pub mod oracle;
pub mod seqcore;

pub use error::{Error, Result};
