use thiserror::Error;

/// Library-wide error type.
///
/// The variants are coarse on purpose: callers (most prominently the CLI)
/// route on the *kind* of failure — bad input, a resolution cap refusal, or a
/// falsification event — not on fine-grained causes.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed data: dangling ids, wrong multiplicities, missing fields.
    #[error("structural error: {0}")]
    Structural(String),

    /// Structurally sound but not a sphere map (genus > 0).
    #[error("topological error: {0}")]
    Topological(String),

    /// Caller-supplied input that fails a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Exact enumeration over 2^c resolutions refused (never sampled).
    #[error("resolution cap exceeded ({crossings} crossings > cap {cap}){context}")]
    CapExceeded {
        crossings: usize,
        cap: usize,
        /// Extra locator, e.g. the offending cycle; empty when not applicable.
        context: String,
    },

    /// A guaranteed-existence search came up empty: a counterexample to a
    /// published statement. Worth aborting loudly over.
    #[error("falsification event: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn cap(crossings: usize, cap: usize, context: impl Into<String>) -> Self {
        let context = context.into();
        let context = if context.is_empty() {
            context
        } else {
            format!(" at {context}")
        };
        Error::CapExceeded {
            crossings,
            cap,
            context,
        }
    }
}
