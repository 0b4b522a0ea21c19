//! Serialization: planar_code, rotation JSON, edge-list JSON and DOT.

pub mod dot;
pub mod json;
pub mod planar_code;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed input at byte {offset}: {reason}")]
    MalformedInput { offset: usize, reason: String },
    #[error("map with {0} vertices does not fit planar_code (at most 255)")]
    TooLarge(usize),
}

impl FormatError {
    pub(crate) fn at(offset: usize, reason: impl Into<String>) -> Self {
        FormatError::MalformedInput {
            offset,
            reason: reason.into(),
        }
    }
}

/// Supported on-disk formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    PlanarCode,
    RotationJson,
    EdgeJson,
    Dot,
}
