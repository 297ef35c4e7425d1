use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{a}, {b}]: need a < b")]
    InvalidInterval { a: f64, b: f64 },
    #[error("invalid subinterval count {0}: need n >= 1")]
    InvalidSize(usize),
    #[error("a partition needs at least two knots, got {0}")]
    TooFewKnots(usize),
    #[error("knots not strictly increasing at index {index} ({prev} >= {value})")]
    NonIncreasingKnots { index: usize, prev: f64, value: f64 },
    #[error("knot {index} is not finite")]
    NonFiniteKnot { index: usize },
    #[error("basis index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("abscissa {x} outside [{a}, {b}]")]
    OutOfDomain { x: f64, a: f64, b: f64 },
    #[error("integrand is not finite at x = {x}")]
    Evaluation { x: f64 },
    #[error("Simpson's rule needs an even number of subintervals, got {0}")]
    OddSubintervals(usize),
    #[error("Simpson's rule is only defined here on uniform partitions")]
    NonUniformPartition,
    #[error("Peano kernel analysis needs n >= 5 (uniform weight formula), got {0}")]
    KernelTooCoarse(usize),
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown builtin integrand {0:?} (expected f1, f2 or f3)")]
    UnknownBuiltin(String),
    #[error("syntax error at offset {offset}: expected {}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("unknown function {name:?} at offset {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("adaptive integration did not converge: worst subinterval [{a}, {b}] with error estimate {estimate:e}")]
    NoConvergence { a: f64, b: f64, estimate: f64 },
    #[error("partition file line {line}: {msg}")]
    PartitionFile { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
