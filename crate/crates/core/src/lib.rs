//! Exact computation with finite-dimensional Hom-alternative and
//! Hom-prealternative superalgebras over ℚ and prime fields.
//!
//! Instances are given by structure constants on a super vector space whose
//! even basis vectors come first. Every law is checked exhaustively on
//! homogeneous basis tuples with exact arithmetic, and failures carry a
//! witness tuple with its residual.

pub mod algebra;
pub mod bilinear;
pub mod bimodule;
pub mod calibration;
pub mod constructions;
pub mod corpus;
pub mod document;
pub mod error;
pub mod laws;
pub mod linalg;
pub mod linear;
pub mod operators;
pub mod rational;
pub mod scalar;
pub mod space;

pub use algebra::{HomAlgebra, HomPreAlgebra};
pub use bilinear::{Bilinear, EvenProduct};
pub use document::{Body, Document, ParseMode};
pub use bimodule::{AltBimodule, PreActions, PreAxiomReading, PreBimodule, Projection};
pub use error::{Error, Result, Violation};
pub use laws::{JordanCycle, LawReport, PreLaw, ProductLaw, Witness};
pub use linear::{EvenMap, Homogeneous, Vector};
pub use operators::{OperatorKind, SearchMode};
pub use scalar::{Field, Scalar};
pub use space::{Parity, SuperSpace};
