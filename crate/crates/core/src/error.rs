use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("trace of an empty matrix product")]
    EmptyProduct,

    #[error("four-momentum not conserved: residual {residual:.3e}")]
    Conservation { residual: f64 },

    #[error("below threshold: s = {s} < 4m² = {threshold}")]
    BelowThreshold { s: f64, threshold: f64 },

    #[error("angle {theta} rad outside the allowed domain {domain}")]
    AngleOutOfDomain { theta: f64, domain: &'static str },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("momentum off the mass shell: p² − m² = {residual:.3e}")]
    OffShell { residual: f64 },

    #[error("null space of dimension {dimension}, expected exactly one")]
    DegenerateNullSpace { dimension: usize },

    #[error("photon momentum has vanishing spatial part")]
    ZeroSpatialMomentum,

    #[error("propagator pole: |q² − m²| = {distance:.3e} below guard {guard:.3e}")]
    Pole { distance: f64, guard: f64 },

    #[error("distribution outside the power-counting family: {0}")]
    UnsupportedDistribution(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("external field queried at zero momentum transfer")]
    ZeroMomentumTransfer,

    #[error("external field has no sample at momentum ({0}, {1}, {2})")]
    MissingFieldSample(f64, f64, f64),

    #[error("field table line {line}: {message}")]
    FieldTable { line: usize, message: String },

    #[error("{quantity}: pipelines disagree, relative spread {spread:.3e} > {tolerance:.1e}")]
    PipelineMismatch {
        quantity: &'static str,
        spread: f64,
        tolerance: f64,
    },

    #[error("process {expected} required, got {found}")]
    WrongProcess {
        expected: &'static str,
        found: &'static str,
    },

    #[error("Compton kinematics must be in the lab frame with the target at rest")]
    NotLabFrame,

    #[error("contact constant does not match the gauge-fixed value I/m (deviation {deviation:.3e})")]
    GaugeConstantMismatch { deviation: f64 },

    #[error("grid spec: {0}")]
    Grid(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
