//! File formats, reports and commands around `bentforge-core`.

pub mod error;
pub mod format;
pub mod report;
pub mod search;
pub mod spec;

pub use error::CliError;
