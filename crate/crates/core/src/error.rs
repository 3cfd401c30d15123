use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("leading coefficient is zero for a polynomial of declared degree {0}")]
    ZeroLeadingCoefficient(usize),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("degree {found} is not allowed here (expected {expected})")]
    BadDegree { found: usize, expected: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has {entries} entries, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        entries: usize,
    },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("interval endpoint {0} is a root; resample the endpoint")]
    EndpointIsRoot(String),

    #[error("interval [{lo}, {hi}] does not isolate exactly one simple root")]
    NotIsolating { lo: String, hi: String },

    #[error("tolerance {eps:e} unreachable within {iterations} iterations")]
    RefineBudgetExceeded { eps: f64, iterations: usize },

    #[error("real root near {root} has multiplicity {multiplicity} >= n/2 = {half}; the integral diverges")]
    RepeatedRootDivergence {
        root: f64,
        multiplicity: usize,
        half: f64,
    },

    #[error("tolerance not reached: value {value}, error estimate {abs_error_estimate:e} after {levels_used} levels")]
    ToleranceNotReached {
        value: f64,
        abs_error_estimate: f64,
        levels_used: usize,
        pieces: usize,
    },

    #[error("non-finite integrand sample at interior abscissa {0}")]
    NonFiniteSample(f64),

    #[error("tolerance {0:e} outside the supported range [1e-13, 1e-4]")]
    ToleranceOutOfRange(f64),

    #[error("Gamma has a pole at {0}")]
    GammaPole(f64),

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}
