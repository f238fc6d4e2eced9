use thiserror::Error;

use crate::algebra::Signature;

/// Errors raised by the algebra, representation and field layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("algebra dimension {0} exceeds the cap of {max} generators", max = crate::algebra::MAX_GENERATORS)]
    DimensionTooLarge(usize),

    #[error("invalid blade {indices:?} for an algebra of dimension {dim}")]
    InvalidBlade { indices: Vec<usize>, dim: usize },

    #[error("unsupported coefficient product: {0}")]
    UnsupportedProduct(String),

    #[error("n must be odd, got {0}")]
    EvenDimension(usize),

    #[error("element is not in the {side} ideal")]
    NotInIdeal { side: &'static str },

    #[error("wrong algebra: expected {expected}, got {got}")]
    WrongAlgebra {
        expected: &'static str,
        got: Signature,
    },

    #[error("Lorentz condition not imposed: scalar part is nonzero")]
    LorentzConditionNotImposed,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not of Dirac-Hestenes form")]
    NotDiracHestenesForm,

    #[error("unsupported spinspace rank {0}")]
    UnsupportedRank(usize),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("missing grid components: {}", .0.join(", "))]
    MissingComponents(Vec<String>),

    #[error("invalid plane wave: {0}")]
    PlaneWave(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
