use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to the group {0}")]
    GroupMismatch(String),
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("window exceeds cap of {cap} elements")]
    WindowTooLarge { cap: usize },
    #[error("morphisms are not composable: target of the first differs from source of the second")]
    NonComposable,
    #[error("characters are only defined on morphisms with positive v")]
    UnsupportedMorphism,
    #[error("grading has not been validated")]
    UnvalidatedGrading,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("explicit table has no entry for the requested element")]
    OutsideDomain,
    #[error("invalid group map: {0}")]
    InvalidMap(String),
    #[error("map is not invertible within the search bound")]
    NotInvertible,
}

pub type Result<T> = core::result::Result<T, Error>;
