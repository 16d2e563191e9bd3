use std::fmt;

use thiserror::Error;

use crate::laws::LawReport;
use crate::scalar::Field;

/// One violated constraint found while validating an instance or document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Where the problem sits, e.g. `payload.product (0,1,0)`.
    pub location: String,
    pub message: String,
}

impl Violation {
    pub fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic 2 unsupported")]
    CharacteristicTwo,

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("space mismatch: expected dims {expected:?}, found {found:?}")]
    SpaceMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{} violation(s): {}", .0.len(), join(.0))]
    Validation(Vec<Violation>),

    /// A construction or check refused because a hypothesis does not hold.
    #[error("precondition failed: {requirement}")]
    Precondition {
        requirement: String,
        report: Box<LawReport>,
    },

    #[error("unknown law {0:?}")]
    UnknownLaw(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("image subspace: {0}")]
    Image(String),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
