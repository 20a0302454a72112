//! Code files, tables and the `projcode` command line.

pub mod cli;
pub mod codefile;
pub mod output;

pub use cli::run;
pub use projcode::construct::SubspaceCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    CodeFile(#[from] codefile::CodeFileError),
    #[error(transparent)]
    Construct(#[from] projcode::construct::ConstructError),
    #[error(transparent)]
    Bounds(#[from] projcode::bounds::BoundsError),
    #[error(transparent)]
    Enumerate(#[from] projcode::enumerate::EnumError),
    #[error(transparent)]
    Channel(#[from] projcode::channel::ChannelError),
    #[error(transparent)]
    Distance(#[from] projcode::distance::DistanceError),
    #[error(transparent)]
    Subspace(#[from] projcode::subspace::SubspaceError),
    #[error(transparent)]
    Rank(#[from] projcode::rankmetric::RankError),
    #[error(transparent)]
    Field(#[from] projcode::ff::FieldError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
