use thiserror::Error;

/// Reasons a partner array fails to describe a non-crossing pairing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("partner sequence is empty")]
    Empty,
    #[error("partner sequence has odd length {0}")]
    OddLength(usize),
    #[error("not a perfect matching at index {index}")]
    NotAMatching { index: usize },
    #[error("arcs ({a},{c}) and ({b},{d}) cross")]
    Crossing {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("invalid {side} pairing: {source}")]
    Validation {
        side: &'static str,
        #[source]
        source: PairingError,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("upper pairing has half-size {upper}, lower has {lower}")]
    SizeMismatch { upper: usize, lower: usize },
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("invalid planar tree: {0}")]
    InvalidTree(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("lower pairing is not the comb pairing")]
    NotCombLike,
    #[error("invalid weight sequence: {0}")]
    InvalidWeights(String),
    #[error("no tree on {vertices} vertices has out-degrees in the weight support")]
    InadmissibleSize { vertices: usize },
    #[error("weight support is contained in {{0, 1}}")]
    DegenerateWeights,
    #[error("invalid rainbow type: {0}")]
    InvalidType(String),
    #[error("no closed gcd formula for rainbow type ({s},{t})")]
    UnsupportedType { s: usize, t: usize },
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("size {requested} exceeds the enumeration guard {limit}")]
    SizeGuard { requested: usize, limit: usize },
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by malformed or invalid input data, as opposed
    /// to bad arguments or I/O trouble.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Pairing(_)
                | Error::Validation { .. }
                | Error::Parse(_)
                | Error::SizeMismatch { .. }
                | Error::InvalidDyckPath(_)
                | Error::InvalidTree(_)
                | Error::InvalidPartition(_)
                | Error::NotCombLike
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
