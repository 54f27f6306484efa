use thiserror::Error;

/// Errors raised by the library. Failed verification checks are not errors;
/// they are recorded in a [`crate::proof::report::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty continued fraction")]
    EmptyString,
    #[error("continued fraction entry {0} is below 2")]
    EntryTooSmall(i64),
    #[error("invalid singularity 1/{q}({a}): need q > a >= 1 and gcd(q, a) = 1")]
    InvalidSingularity { q: i64, a: i64 },
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("singular intersection matrix")]
    SingularMatrix,
    #[error("not a Q-homology-plane candidate: {0}")]
    NotQHomologyCandidate(String),
    #[error("invalid c = {c}: c^2 does not divide D = {d}")]
    InvalidIndex { c: u64, d: String },
    #[error("model `{0}` has no primitive-closure index c, so D' is unknown")]
    MissingIndex(String),
    #[error("D' = {0} is not a perfect square")]
    DPrimeNotSquare(String),
    #[error("unknown singular point `{0}`")]
    UnknownPoint(String),
    #[error("component {index} is out of range for point `{label}` (length {len})")]
    ComponentOutOfRange { label: String, index: usize, len: usize },
    #[error("duplicate singular point label `{0}`")]
    DuplicateLabel(String),
    #[error("wrong model shape: {0}")]
    WrongModelShape(String),
    #[error("invalid fibre scenario: {0}")]
    InvalidScenario(String),
    #[error("invalid torsion group: {0}")]
    InvalidGroup(String),
    #[error("unsupported fundamental group order {0} of the quotient")]
    UnsupportedQuotient(u64),
    #[error("3-divisibility of K is not determined for a group with 3-torsion")]
    DivisibilityUnknown,
    #[error("no contradiction derivable: {0}")]
    NoContradiction(String),
    #[error("invalid vanishing pattern: {0}")]
    InvalidPattern(String),
    #[error("section elimination is inconclusive after {eliminated} steps")]
    Inconclusive { eliminated: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("unknown check group `{0}`")]
    UnknownGroup(String),
    #[error("model file: {0}")]
    ModelFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
