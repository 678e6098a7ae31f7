use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("matrix is not Hermitian (asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("entries must be finite")]
    NonFinite,

    #[error("matrix dimension {0} is not the square of local dimension {1}")]
    NotBipartite(usize, usize),

    #[error("eigensolver did not converge after {0} sweeps")]
    EigNoConvergence(usize),

    #[error("subsystem index must be 1, 2 or 3 (got {0})")]
    InvalidSubsystem(usize),

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("basis index must be 0..=8 (got {0})")]
    InvalidBasisIndex(usize),

    #[error("singular denominator |2x + 1/x| = {0:.3e}")]
    SingularDenominator(f64),

    #[error("invalid drive parameters: {0}")]
    InvalidDrive(String),

    #[error("sin(theta) = 0: the band structure is degenerate there")]
    DegenerateSpectrum,

    #[error("off-block leakage {0:.3e} exceeds {1:.1e}")]
    BlockLeakage(f64, f64),

    #[error("normalization for subsystem {k} band {band} is {value:.3e}, not positive")]
    NonPositiveNormalization { k: usize, band: char, value: f64 },

    #[error("band tracking lost at step {step} (overlap {overlap:.3}); increase steps")]
    BandTrackingLost { step: usize, overlap: f64 },

    #[error("step count {0} is below the minimum of {1}")]
    TooFewSteps(usize, usize),

    #[error("period check failed: |H(T) - H(0)| = {0:.3e}")]
    PeriodMismatch(f64),

    #[error("the SU(2) form requires n1 == n2 (got {0}, {1})")]
    UnequalFrequencies(i64, i64),

    #[error("expansion residual {0:.3e} exceeds {1:.1e}")]
    ExpansionResidual(f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
