use thiserror::Error;

use crate::diagram::Shape;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("nonzero remainder after {completed} of {requested} divisions by the linear factor")]
    NonzeroRemainder { completed: usize, requested: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: Shape, right: Shape },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("illegal move at step {step}: {reason}")]
    IllegalMove { step: usize, reason: String },

    #[error("parity violation: pair ({i},{j}) does not admit this factor kind")]
    ParityViolation { i: usize, j: usize },

    #[error("pole of order {pole_order} at u = {point} did not cancel at step {step}")]
    CancellationFailure {
        step: usize,
        point: String,
        pole_order: usize,
    },

    #[error("evaluation at u = {point} hits a pole at step {step}")]
    PoleAtEvaluation { step: usize, point: String },

    #[error("h is not generic: {0}")]
    NonGenericH(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NonzeroRemainder { .. } => "NonzeroRemainder",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::Parse { .. } => "ParseError",
            Error::IllegalMove { .. } => "IllegalMove",
            Error::ParityViolation { .. } => "ParityViolation",
            Error::CancellationFailure { .. } => "CancellationFailure",
            Error::PoleAtEvaluation { .. } => "PoleAtEvaluation",
            Error::NonGenericH(_) => "NonGenericH",
            Error::ZeroDenominator(_) => "ZeroDenominator",
            Error::Unsupported(_) => "Unsupported",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
