use bentforge_core::construction::ConstructionError;
use bentforge_core::field::FieldError;
use bentforge_core::function::FunctionError;
use bentforge_core::poly_repr::PolyError;
use bentforge_core::walsh::WalshError;

/// Errors surfaced by the commands, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("golden mismatch for {name}:\n  {}", diffs.join("\n  "))]
    GoldenMismatch { name: String, diffs: Vec<String> },
    #[error("{0}")]
    Validation(String),
    #[error("domain of size {size} exceeds the limit {limit} (set BENTFORGE_MAX_DOMAIN to override)")]
    RangeTooLarge { size: u64, limit: u64 },
    #[error("invariant breach: {0}")]
    Invariant(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::GoldenMismatch { .. } => 1,
            CliError::Invariant(_) => 3,
            _ => 2,
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::MergedNotBent
            | ConstructionError::NotNearBent { .. }
            | ConstructionError::SupportsOverlap { .. } => CliError::Invariant(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

macro_rules! validation_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Validation(e.to_string())
            }
        }
    )*};
}

validation_from!(FieldError, FunctionError, WalshError, PolyError);
