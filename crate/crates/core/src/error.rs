use alloc::string::String;

/// Errors raised by the model, the oracles and the simulated subroutines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DyckError {
    #[error("range [{l}, {r}] is out of bounds for a string of length {n}")]
    IndexOutOfRange { l: usize, r: usize, n: usize },

    #[error("bracket code {code} at position {position} is outside 1..={max}")]
    InvalidCode { code: u32, position: usize, max: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl DyckError {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        DyckError::InvalidArgument(msg.into())
    }
}

pub type Result<T, E = DyckError> = core::result::Result<T, E>;
