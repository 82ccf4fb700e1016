use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation is not a bijection")]
    NotBijective,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u64 },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid group parameters: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum CharTableError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no prime modulus found below {0}")]
    NoModulus(u64),
    #[error("eigenspace refinement did not split the class algebra completely")]
    IncompleteSplit,
    #[error("degree recovery failed: {0}")]
    DegreeRecovery(String),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("genus {0} invariants at primes require Brauer-degree data (unsupported without data)")]
    MissingBrauerData(u32),
    #[error("prime {0} is required for this invariant")]
    MissingPrime(&'static str),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("malformed Brauer-degree file: {0}")]
    BrauerFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum TqftError {
    #[error("unknown cobordism piece {0:?}")]
    UnknownPiece(String),
    #[error("piece {piece} at position {position} needs {needed} boundary circle(s), found {available}")]
    Arity {
        piece: &'static str,
        position: usize,
        needed: usize,
        available: usize,
    },
    #[error("word is not closed (ends with {0} boundary circles)")]
    NotClosed(usize),
    #[error("Frobenius relation failed mod {ell}: {what}")]
    Relation { ell: u64, what: String },
    #[error(transparent)]
    CharTable(#[from] CharTableError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Tqft(#[from] TqftError),
    #[error("report format: {0}")]
    Report(String),
}
