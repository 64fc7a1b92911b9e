//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors produced by construction contracts, sampling preconditions, and
/// numeric failures. Non-finite losses or gradients surface as [`CoreError::Diverged`]
/// so the caller can abort the run with a diagnostic record instead of
/// continuing silently.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// A vector or matrix does not match the shape fixed at construction.
    Shape {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// A configuration value violates its documented range.
    Config(String),
    /// A sampling source required by the requested proportions is empty.
    EmptySource(&'static str),
    /// Finite data was required (dataset records, rewards, observations).
    NonFinite(&'static str),
    /// Training produced a NaN loss or gradient, or a blown-up value; the
    /// run must abort.
    Diverged(&'static str),
    /// An operation was called outside its documented precondition.
    Precondition(&'static str),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::Shape {
                what,
                expected,
                got,
            } => write!(f, "shape mismatch in {what}: expected {expected}, got {got}"),
            CoreError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            CoreError::EmptySource(src) => write!(f, "sampling source is empty: {src}"),
            CoreError::NonFinite(what) => write!(f, "non-finite value in {what}"),
            CoreError::Diverged(what) => write!(f, "training diverged: {what}"),
            CoreError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub type Result<T> = core::result::Result<T, CoreError>;
