use std::fmt;

use iwahori_core::braid::BraidError;
use iwahori_core::coefficients::CoeffError;
use iwahori_core::hecke::HeckeError;
use iwahori_core::invariants::InvariantError;
use iwahori_core::oracles::OracleError;
use iwahori_core::specht::SpechtError;
use iwahori_core::trace::TraceError;

/// A failure together with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable input: exit code 2.
    Input(String),
    /// Well-formed input the chosen field or parameters cannot handle: 3.
    Precondition(String),
    /// A computed invariant failed its own check: 4.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Precondition(m) => write!(f, "unsupported: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CoeffError> for CliError {
    fn from(e: CoeffError) -> Self {
        match e {
            CoeffError::Parse { .. } | CoeffError::NotPrime(_) => CliError::Input(e.to_string()),
            CoeffError::ContextMismatch(..) => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        match e {
            HeckeError::Braid(b) => b.into(),
            HeckeError::Coeff(c) => c.into(),
            HeckeError::GeneratorOutOfRange { .. } | HeckeError::DegreeMismatch { .. } => {
                CliError::Input(e.to_string())
            }
            HeckeError::FieldMismatch { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::Hecke(h) => h.into(),
            TraceError::Braid(b) => b.into(),
            TraceError::Coeff(c) => c.into(),
            TraceError::Specht(s) => (*s).into(),
            TraceError::NotAPartition(_) | TraceError::Unparseable(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Trace(t) => t.into(),
            InvariantError::TooManyCrossings { .. } => CliError::Precondition(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<SpechtError> for CliError {
    fn from(e: SpechtError) -> Self {
        match e {
            SpechtError::Hecke(h) => h.into(),
            SpechtError::Coeff(c) => c.into(),
            SpechtError::SizeMismatch { .. } => CliError::Input(e.to_string()),
            SpechtError::ParameterNotUnit => CliError::Precondition(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::OutOfBounds { .. } => CliError::Precondition(e.to_string()),
            OracleError::Hecke(h) => h.into(),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}
