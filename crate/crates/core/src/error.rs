use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("group order {order} exceeds the hard cap {cap}")]
    OrderCap { order: u128, cap: u128 },
    #[error("group order {order} exceeds the {what} cap {cap}")]
    SizeCap {
        what: &'static str,
        order: u128,
        cap: usize,
    },
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("subgroup does not belong to this group")]
    ForeignSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("verification scope is empty")]
    EmptyScope,
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether this error reports a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::SizeCap { .. })
    }
}
