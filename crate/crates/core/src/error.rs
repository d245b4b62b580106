use thiserror::Error;

/// Errors produced anywhere in the enumeration pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square or empty")]
    NotSquare,
    #[error("entry table[{0}][{1}] = {2} is out of range")]
    NotClosed(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0} does not divide the group order")]
    PrimeNotDividing(u64),

    #[error("automorphism group exceeds cap of {cap} elements")]
    AutTooLarge { cap: usize },
    #[error("holomorph order {order} exceeds cap {cap}")]
    HolTooLarge { order: usize, cap: usize },
    #[error("group order {0} is not a prime power")]
    NotAPGroup(usize),
    #[error("element set is not a subgroup of the holomorph")]
    NotASubgroup,
    #[error("more than {limit} regular subgroups")]
    SearchTooLarge { limit: usize },
    #[error("lambda function violates the closure identity at ({0}, {1})")]
    ClosureViolated(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("group {label}: {source}")]
    InvalidGroup {
        label: String,
        #[source]
        source: Box<Error>,
    },
    #[error("groups {0} and {1} are isomorphic")]
    DuplicateIsoType(String, String),
    #[error("catalog is incomplete for order {0}")]
    IncompleteCatalog(usize),
    #[error("order {0} is beyond the built-in enumerator")]
    OrderTooLarge(usize),
    #[error("unknown group id {0}")]
    UnknownGroup(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
