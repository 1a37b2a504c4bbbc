use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("working precision must be at least {min} bits, got {got}")]
    PrecisionTooLow { got: u32, min: u32 },

    #[error("not superoscillatory regime: spacing/lambda_min = {ratio} is at or above 1/2")]
    NotSuperoscillatory { ratio: f64 },

    #[error("matrix not numerically SPD at current precision; raise bits (pivot {index} = {pivot})")]
    NotSpd { index: usize, pivot: String },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off_norm})")]
    NotConverged { sweeps: usize, off_norm: String },

    #[error("precision exhausted: smallest eigenvalue {value} indistinguishable from 0 at {bits} bits")]
    PrecisionExhausted { value: String, bits: u32 },

    #[error("coincident constraint points at index {index}")]
    CoincidentNodes { index: usize },

    #[error("invalid node specification: {0}")]
    InvalidNodes(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("interval not oscillatory: found {crossings} zero crossings, need at least 3")]
    NotOscillatory { crossings: usize },

    #[error("slit misses wave function: captured probability {captured}")]
    SlitMisses { captured: String },

    #[error("quadrature too coarse: estimated error {estimate:e} of captured mass; try n_quad >= {hint}")]
    QuadratureTooCoarse { estimate: f64, hint: usize },

    #[error("momentum grid half-width {got} below required {min}")]
    MomentumGridTooNarrow { got: f64, min: f64 },

    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),

    #[error("cannot parse number {0:?}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("io: {0}")]
    Io(String),

    #[error("imaginary residue {residue} of a Hermitian form exceeds tolerance {tolerance}")]
    ImaginaryResidue { residue: String, tolerance: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}
