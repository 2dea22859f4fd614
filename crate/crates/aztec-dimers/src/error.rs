use crate::lattice::Vertex;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("({x:?}, {y:?}) is not a lattice edge")]
    NotAnEdge { x: Vertex, y: Vertex },
    #[error("parity violation: {0}")]
    ParityError(String),
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
    #[error("point {0} within {1:e} of a branch cut; side-step or use a sided evaluation")]
    OnBranchCut(num_complex::Complex64, f64),
    #[error("magnitude out of range for f64: log-modulus {0}")]
    Overflow(f64),
    #[error("matrix is numerically singular")]
    SingularMatrix,
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("quadrature failed to converge: residual {residual:e} after {evals} evaluations")]
    NotConverged { residual: f64, evals: usize },
    #[error("argument outside domain: {0}")]
    OutOfDomain(String),
    #[error("no admissible root found: {0}")]
    NoRoot(String),
    #[error("contour trace diverged at {0}")]
    TraceDiverged(num_complex::Complex64),
    #[error("failed to locate branch-cut hit point: {0}")]
    CutHitNotFound(String),
    #[error("quadrature nodes collide near the contour crossing (min distance {0:e})")]
    NearCrossingSingular(f64),
    #[error("empty region")]
    EmptyRegion,
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
