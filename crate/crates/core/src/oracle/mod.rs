//! Exact computation of logarithmic derivation modules D(A, m).

pub mod arrangement;
pub mod derivation;
pub mod generators;
pub mod linalg;
pub mod poly;
pub mod saito;
pub mod verdict;

pub use arrangement::{parse_arrangement, ArrangementDoc, Hyperplane, MultiArrangement};
pub use derivation::{graded_dimension, DerivationElement, OracleLimits};
pub use generators::{minimal_generators, DegreeRow, Essentialization, GeneratorTable};
pub use poly::{MonomialBasis, Poly};
pub use saito::{saito_check, SaitoOutcome};
pub use verdict::{freeness_verdict, CertificateReport, CertificateStatus, FreenessCertificate, OracleOptions};
