//! Bicolor-eliminable graphs, free multi-braid arrangements, and an exact
//! logarithmic-derivation oracle to check them against.

pub mod deformation;
pub mod elim;
pub mod error;
pub mod graph;
pub mod multibraid;
pub mod oracle;
pub mod scalar;

pub use deformation::{deformation_verdict, DeformationSpec, DeformationStatus, DeformationVerdict};
pub use elim::{find_ordering, is_eliminable, Ordering};
pub use error::{Error, Result};
pub use graph::{DirectedGraph, EdgeBicoloredGraph, EdgeColor};
pub use multibraid::{classify, MultiBraidSpec, Verdict, VerdictStatus};
pub use scalar::Scalar;

/// Exact field used for every certified verdict.
pub type Rational = num_rational::BigRational;

pub type RationalArrangement = oracle::MultiArrangement<Rational>;
pub type RationalCertificate = oracle::FreenessCertificate<Rational>;
/// Floating-point arrangements: fast, but verdicts are heuristic.
pub type FloatArrangement = oracle::MultiArrangement<f64>;
pub type FloatCertificate = oracle::FreenessCertificate<f64>;
