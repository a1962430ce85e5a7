//! Typed domain errors.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Rejection of arguments outside an operation's domain.
///
/// These variants cover caller mistakes only. Violations of internal
/// invariants — overflow, a freshly constructed point failing its own
/// identity, a progression formula disagreeing with extended Euclid — are
/// bugs and panic instead of being reported here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pair that must be coprime shares a factor.
    #[error("{p} and {q} share the factor {gcd}; the pair must be coprime")]
    NotCoprime { p: i128, q: i128, gcd: i128 },

    /// An argument lies below the operation's minimum.
    #[error("{name} = {value}, but at least {min} is required")]
    TooSmall {
        name: &'static str,
        value: i128,
        min: i128,
    },

    /// An argument that must not vanish is zero.
    #[error("{name} must not be zero")]
    Zero { name: &'static str },

    /// An argument escapes the operation's documented range.
    #[error("{what}")]
    OutOfRange { what: String },

    /// A coordinate pair that should be a +1 coefficient point is not one.
    #[error("({x}, {y}) is not a +1 coefficient point for modulus {modulus}")]
    NotBezoutPoint { modulus: i128, x: i128, y: i128 },
}

/// Shorthand used by the modules for lower-bound checks.
pub(crate) fn ensure_min(name: &'static str, value: i128, min: i128) -> Result<()> {
    if value < min {
        return Err(Error::TooSmall { name, value, min });
    }
    Ok(())
}
