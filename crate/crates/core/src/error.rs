use thiserror::Error;

/// Errors raised by the library.
///
/// Variants other than [`Error::Internal`] describe bad input; `Internal`
/// means an invariant of the geometry was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported affine type `{0}` (expected one of A1.., B3.., C2.., D4.., E6, E7, E8, F4, G2)")]
    UnsupportedType(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("cannot parse {what} `{input}`: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("word {0:?} is not reduced; galleries must have the type of a minimal gallery")]
    NotReduced(Vec<u8>),

    #[error("coroot {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("element {0} is not (W_sigma, W_tau)-reduced; replace it by its reduced double coset representative")]
    NotTwoSidedReduced(String),

    #[error("label constraint violated at step {step}: {reason}")]
    LabelConstraint { step: usize, reason: String },

    #[error("rendering requires a rank 2 system, got rank {0}")]
    UnsupportedRender(usize),

    #[error("spherical Weyl group of order {0} is too large to enumerate")]
    TooLarge(u64),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error reflects a problem with the caller's input.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
