//! Exact checks for Lie algebroids, their representations, matched pairs,
//! Lie bialgebras and bialgebroids, and the duality theory of double
//! vector spaces.
//!
//! All arithmetic is over the rationals. Structures are polynomial over an
//! affine base, and every check returns a [`Report`] that names the first
//! failing case together with its residual.

// index loops mirror the tensor notation of structure functions
#![allow(clippy::needless_range_loop)]

pub mod algebroid;
pub mod calculus;
pub mod doubles;
pub mod dvs;
pub mod error;
pub mod fixtures;
pub mod foundation;
pub mod io;
pub mod report;
pub mod representation;
pub mod sampling;
pub mod verified;

pub use algebroid::{BaseSpace, Derivation, LieAlgebroid, Section};
pub use calculus::{base_poisson, check_bialgebroid, semidirect_e, semidirect_edual, tangent_pair, MultiSection};
pub use doubles::{
    check_bialgebra_twisted, check_manin, check_matched, drinfeld_double, extract_matched, matched_double,
    random_perturbation, BilinearPairing, LieBialgebraData, MatchedPairData, Perturbation, Target,
};
pub use dvs::{CotangentModel, DoubleVectorSpace, DualElement, DualKind, DvsElement, ZMaps};
pub use error::{Error, Result};
pub use foundation::{int, parse_rational, rat, Polynomial, Rational};
pub use report::{Check, Report, ValidationReport, Witness};
pub use representation::CdoRep;
pub use sampling::CheckConfig;
pub use verified::{Validate, Verified};
