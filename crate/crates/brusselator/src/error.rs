use thiserror::Error;

/// Unified error type for the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Constructor-time rejection; names the offending field.
    #[error("invalid {field}: {message}")]
    Validation { field: &'static str, message: String },

    /// lambda0 and lambda1 coincide within tolerance; the transition type is
    /// a codimension-two question the expansions cannot answer.
    #[error("degenerate crossing: lambda0 = {lambda0} and lambda1 = {lambda1} coincide within tolerance")]
    Degenerate { lambda0: f64, lambda1: f64 },

    /// The minimizing mode index is tied; coefficient expansions need it unique.
    #[error("critical mode index is not unique: candidates {0:?}")]
    NonUniqueCriticalMode(Vec<usize>),

    /// A slaved-mode block is singular at the critical value.
    #[error("resonant mode {mode}: its linear block is singular at the critical value")]
    Resonance { mode: usize },

    #[error("not a Hopf crossing: sigma0^2 = {sigma0_sq} is not positive")]
    NotHopf { sigma0_sq: f64 },

    /// Coefficient too close to zero to call a sign.
    #[error("inconclusive sign: |{value:e}| is within the {tolerance:e} noise band; refine and retry")]
    InconclusiveSign { value: f64, tolerance: f64 },

    /// Cube integral does not vanish, so the requested even-branch machinery
    /// does not apply.
    #[error("cube integral of the critical mode is nonzero ({cube}); the transition is mixed")]
    NonzeroCube { cube: f64 },

    /// Branch evaluation requested where the branch does not exist.
    #[error("no branch on this side of the critical value: {message}")]
    WrongSide { message: String },

    #[error("simulation blew up at t = {t}")]
    BlowUp { t: f64 },

    #[error("scan bound too small: {0}")]
    ScanExhausted(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 usage/validation, 2 inconclusive or
    /// degenerate science, 3 numerical blow-up.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Degenerate { .. }
            | Error::InconclusiveSign { .. }
            | Error::NonUniqueCriticalMode(_) => 2,
            Error::BlowUp { .. } => 3,
            _ => 1,
        }
    }
}
