//! File formats and the `cmoments` command-line front end for
//! [`complex_moments`].

mod app;
pub mod csv_io;
pub mod spec_file;

pub use app::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error(transparent)]
    Numeric(#[from] complex_moments::Error),
    #[error("writing output: {0}")]
    Output(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Output(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}
