use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("chart mismatch: `{left}` vs `{right}`")]
    ChartMismatch { left: String, right: String },

    #[error("invalid chart: {0}")]
    InvalidChart(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate contact form: {0}")]
    Degenerate(String),

    #[error("group action does not preserve the symplectic form")]
    NotSymplectic,

    #[error("boundary composition is nonzero between degrees {from} and {to} (weight {weight})")]
    NotAComplex { weight: usize, from: usize, to: usize },

    #[error("negative radial exponent {0}")]
    NegativeRadialExponent(i64),

    #[error("radius {radius} is not covered")]
    Uncovered { radius: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
