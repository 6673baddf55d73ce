//! Exact computational workbench for diagram algebras.
//!
//! The crate realizes the Dieck-Temperley-Lieb algebras `DTL(B_n)` and
//! `DTL(C_n)` inside Brauer/Temperley-Lieb diagram monoids of types A and D,
//! and verifies their presentation relations, rewriting identities and rank
//! formulas by exhaustive enumeration and independent oracle cross-checks.
//!
//! Modules follow the moving parts of that construction:
//!
//! * [`scalars`] — canonical arithmetic in `<δ^{±1}>` and the monoid `H`.
//! * [`rootsys`] — simply-laced root systems, reflections, heights, the
//!   type-D star map.
//! * [`admissible`] — admissible root sets, closures, Weyl/Brauer-monoid
//!   actions, orbit posets.
//! * [`diagrams_a`] — classical Brauer diagrams of type A and their
//!   Temperley-Lieb (planar) submonoid.
//! * [`diagrams_d`] — Brauer diagrams of type D: the undecorated layer L1
//!   and the decorated layer L2.
//! * [`dtl`] — the DTL presentations, diagram embeddings, spanning sets,
//!   rank computations and the constructive isomorphism check.
//! * [`suites`] — named relation/property verification suites shared by the
//!   CLI and the acceptance tests.

pub mod admissible;
pub mod diagrams_a;
pub mod diagrams_d;
pub mod dtl;
pub mod rootsys;
pub mod scalars;
pub mod suites;

use thiserror::Error;

/// Errors surfaced by workbench operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("node index {index} out of range for {context}")]
    NodeIndex { index: usize, context: String },
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),
    #[error("the star map is defined for type D systems, not {0}")]
    StarRequiresTypeD(String),
    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("closure of {0} produced a non-orthogonal set; invalid input configuration")]
    ClosureNotOrthogonal(String),
    #[error("set {set} is not admissible; its admissible closure is {closure}")]
    NotAdmissible { set: String, closure: String },
    #[error("set not contained in the given orbit poset")]
    NotInPoset,
    #[error("raise/lower classification is ambiguous from both sides of the edge {0}")]
    AmbiguousEdgeClass(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorIndex { index: usize, strands: usize },
    #[error("element cap of {0} exceeded during monoid enumeration")]
    ElementCapExceeded(usize),
    #[error("decorated operand passed to the undecorated (L1) composition")]
    DecoratedOperandInL1,
    #[error("decorated loop with no decorated pair to absorb it ({0}); configuration outside the reduction rule table")]
    LoneDecoratedLoop(String),
    #[error("rank computations disagree: {0}")]
    RankMismatch(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
}

pub type Result<T> = std::result::Result<T, Error>;
