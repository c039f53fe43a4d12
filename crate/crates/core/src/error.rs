use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(
        "pair independence ratio undefined: maximum degree {max_degree} gives floor(D^2/4) = 0"
    )]
    DegenerateKappa { max_degree: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{what}: argument {value} outside domain [{lo}, {hi}]")]
    Domain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("near-zero denominator: |F(z)| = {magnitude:e} below threshold {threshold:e}")]
    Conditioning { magnitude: f64, threshold: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
