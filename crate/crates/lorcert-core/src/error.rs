use thiserror::Error;

/// Errors raised by the exact kernels. Every variant names the offending
/// quantity so CLI diagnostics can point at the bad field directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational '{0}'")]
    MalformedRational(String),
    #[error("negative exponent in '{0}'")]
    NegativeExponent(String),
    #[error("term {term}: exponent sum {found} does not match degree {expected}")]
    NotHomogeneous {
        term: String,
        found: u32,
        expected: u32,
    },
    #[error("exponent length {found} does not match variable count {expected}")]
    ExponentLength { found: usize, expected: usize },
    #[error("variable counts differ: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("variable index {index} out of range for {n} variables")]
    VariableIndex { index: usize, n: usize },
    #[error("matrix has {found} rows, expected {expected}")]
    MatrixRows { found: usize, expected: usize },
    #[error("matrix entry ({row},{col}) = {value} is negative")]
    NegativeMatrixEntry {
        row: usize,
        col: usize,
        value: String,
    },
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial must have degree {expected}, found {found}")]
    WrongDegree { found: u32, expected: u32 },
    #[error("support mixes exponent sums {0} and {1}")]
    MixedDegrees(u32, u32),
    #[error("ambient dimension {0} unsupported here (general bodies need dim <= 3)")]
    UnsupportedDimension(usize),
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("body has no vertices")]
    EmptyBody,
    #[error("vertex {index} has {found} coordinates, expected {expected}")]
    VertexLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("basis vectors {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("basis vector {0} is zero")]
    ZeroBasisVector(usize),
    #[error("body {body} does not lie in the given subspace")]
    BodyOutsideSubspace { body: usize },
    #[error("partition side is empty")]
    EmptyPartitionSide,
    #[error("partition does not cover every variable exactly once")]
    BadPartition,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("too many variables for exhaustive enumeration: {found} > {max}")]
    TooManyVariables { found: usize, max: usize },
    #[error("target must be multiaffine, exponent {0} exceeds 1")]
    NotMultiaffine(String),
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
}

impl Error {
    pub fn invalid(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            context: context.into(),
            message: message.into(),
        }
    }
}
