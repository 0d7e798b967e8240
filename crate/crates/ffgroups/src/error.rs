use std::io;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Group(#[from] ffgroups_core::Error),
    #[error("cannot parse group `{0}`")]
    UnknownGroup(String),
    #[error("{0}")]
    Usage(String),
    #[error("subgroup equals the whole group; the cover is only defined for proper subgroups")]
    SubgroupIsWholeGroup,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
