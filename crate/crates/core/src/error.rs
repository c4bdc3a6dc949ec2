//! Error types shared across the crate.
//!
//! Errors fall into two families that callers (notably the CLI) treat
//! differently: input problems (`Validation`, `Structure`) and resource
//! limits (`Resource`, `Precision`, `Budget`). Every resource error names
//! the cap that was hit so the caller can raise it deliberately.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input fails a precondition (bad modulus, overlapping prime sets, ...).
    #[error("validation: {0}")]
    Validation(String),

    /// Input parses but does not have the required structure
    /// (e.g. moduli that are not of the form q or q*p).
    #[error("structure: {0}")]
    Structure(String),

    /// A configured resource cap would be exceeded.
    #[error("resource: {what} requires {required} but the cap is {cap}")]
    Resource {
        what: &'static str,
        required: String,
        cap: String,
    },

    /// The interval evaluation hit the precision cap while the result was
    /// still ambiguous. Never a silently wrong answer.
    #[error("precision: cap of {cap_bits} fractional bits reached with ambiguous floor ({context})")]
    Precision { cap_bits: u32, context: String },

    /// The solver exhausted its node budget.
    #[error("budget: node budget of {budget} exhausted")]
    Budget { budget: u64 },
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub fn resource(what: &'static str, required: impl ToString, cap: impl ToString) -> Self {
        Error::Resource {
            what,
            required: required.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for errors that signal a cap rather than a bad input.
    pub fn is_resource_class(&self) -> bool {
        matches!(
            self,
            Error::Resource { .. } | Error::Precision { .. } | Error::Budget { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resource_error_names_cap() {
        let e = Error::resource("sieve", 123_456u64, 100u64);
        let msg = e.to_string();
        assert!(msg.contains("sieve"));
        assert!(msg.contains("123456"));
        assert!(msg.contains("100"));
        assert!(e.is_resource_class());
    }

    #[test]
    fn validation_is_not_resource_class() {
        assert!(!Error::validation("n must be positive").is_resource_class());
        assert!(!Error::structure("bad modulus").is_resource_class());
    }
}
