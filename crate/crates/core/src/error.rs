use alloc::string::String;

/// Errors raised by the numerical and physical routines in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("argument {value} outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("two-qubit matrix is not an X state (off-X magnitude {magnitude:e})")]
    NotXState { magnitude: f64 },

    #[error("readout fidelity {value} must lie in (0.5, 1]")]
    SingularCorrection { value: f64 },

    #[error("intrinsic population {value} at outcome {index} is below the -0.02 tolerance")]
    NegativePopulation { index: usize, value: f64 },

    #[error("inconsistent populations for setting {setting}: {reason}")]
    InconsistentPopulations { setting: String, reason: String },

    #[error("setting {0} is missing from the tomography record set")]
    MissingSetting(String),

    #[error("setting {0} appears more than once")]
    DuplicateSetting(String),

    #[error("invalid setting label {0:?}")]
    InvalidSetting(String),

    #[error("tunneling time is infinite at kappa0 = 0")]
    InfiniteTunnelingTime,
}

pub type Result<T> = core::result::Result<T, Error>;
