//! Crate-wide error type.
//!
//! Errors are grouped by how a caller should react to them:
//!
//! * [`Error::Malformed`], [`Error::Syntax`], [`Error::RepeatedIndex`] — the
//!   *input text or data* is broken (bad JSON, duplicate vertex ids, a bracket
//!   expression that does not parse).
//! * The remaining non-internal variants — the input is well-formed but a
//!   *mathematical precondition* fails (a boundary of a single vertex, a
//!   sphere of dimension < 2, a degree above the truncation bound, …).
//! * [`Error::Internal`] — an invariant the library guarantees was violated;
//!   this is always a bug, never a user error.

use thiserror::Error;

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input data is self-inconsistent (duplicate ids, facets outside the
    /// vertex set, mismatched part counts, …).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Input is well-formed but outside the mathematical domain of the
    /// operation (boundary of a vertex, sphere dimension < 2, …).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A bracket expression failed to parse. `offset` is the byte position
    /// in the original string where the problem was detected.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A bracket expression uses the same index twice; indices must be
    /// pairwise distinct across the whole expression.
    #[error("repeated index m{0} in bracket expression")]
    RepeatedIndex(u32),

    /// An operation that needs a homogeneous element received a mix of
    /// degrees.
    #[error("element is not homogeneous: degrees {0} and {1} both occur")]
    MixedDegree(u32, u32),

    /// An element mentions a generator the algebra at hand does not own.
    #[error("generator {0} does not belong to this algebra")]
    ForeignGenerator(String),

    /// A degree query went above the truncation bound, where the generator
    /// list (and hence any basis) is incomplete.
    #[error("degree {requested} exceeds the truncation bound {bound}")]
    AboveBound { requested: u32, bound: u32 },

    /// A higher Whitehead product is not defined in the given complex: the
    /// boundary complex of the bracket is not contained in it.
    #[error("whitehead product not defined: simplex {missing} is not in the complex")]
    NotDefined { missing: String },

    /// `class_is_zero` was asked about an element that is not a cycle.
    #[error("element is not a cycle")]
    NotACycle,

    /// An internal invariant was violated. Always a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate broken *input data or text* rather than
    /// a mathematical precondition. Useful for exit-code classification.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Malformed(_) | Error::Syntax { .. } | Error::RepeatedIndex(_)
        )
    }
}
