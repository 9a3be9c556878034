use thiserror::Error;

/// Errors raised across field arithmetic, linear algebra, code construction and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // fields
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field order {p}^{m} is too large")]
    FieldTooLarge { p: u64, m: usize },
    #[error("value {value} is not an element of a field of order {q}")]
    NotAnElement { value: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{d} does not divide {order}")]
    NotADivisor { d: u64, order: u64 },
    #[error("basis elements are linearly dependent over the prime field")]
    DependentBasis,
    #[error("representatives {0} and {1} lie in the same coset")]
    RepeatedCoset(usize, usize),
    #[error("the selected cosets do not form a subgroup of the quotient group")]
    NotAQuotientSubgroup,
    #[error("the selected cosets form the whole quotient group, not a proper subgroup")]
    NotAProperSubgroup,
    #[error("the given elements do not form a subgroup")]
    NotASubgroup,
    #[error("GF({q0}^{d}) is not a subfield of the ambient field")]
    NotASubfield { q0: u64, d: u64 },
    #[error("malformed field string {0:?}")]
    BadFieldString(String),

    // linear algebra
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    // codes
    #[error("invalid code parameters: {0}")]
    InvalidSpec(String),
    #[error("evaluation at infinity is only defined for hook-free or single (1, k-1) twists")]
    InfinityUnsupported,
    #[error("column multiplier {0} is zero")]
    ZeroMultiplier(usize),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("message has length {found}, expected {expected}")]
    MessageLength { expected: usize, found: usize },

    // verification
    #[error("exhaustive enumeration of {q}^{k} codewords exceeds the limit")]
    TooLarge { q: u64, k: usize },
    #[error("code is not MDS")]
    NotMds,
    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("oracles disagree on {check}: {detail}")]
    OracleDisagreement { check: String, detail: String },

    // recipes
    #[error("eta lies in the forbidden coset union")]
    EtaInForbiddenSet,
    #[error("eta is not in the required coset")]
    EtaNotInRequiredCoset,
    #[error("2^{0}-1 is prime; the extended construction needs a composite order")]
    MersennePrimeField(usize),
    #[error("bad coset element: {0}")]
    BadCosetElement(String),
    #[error("kernel entry u_{0} is not a square")]
    NonSquareKernelEntry(usize),
    #[error("evaluation point repeated at positions {0} and {1}")]
    RepeatedPoint(usize, usize),
    #[error("beta must avoid 0, 1 and -1")]
    BadBeta,
    #[error("subfield chain is broken: {0}")]
    BrokenChain(String),
    #[error("eta_{0} is not in the required layer of the subfield chain")]
    EtaInWrongLayer(usize),
    #[error("evaluation point {0} is not in the base subfield")]
    AlphaNotInBase(usize),
    #[error("(n, k) = ({n}, {k}) satisfies none of the LCD cases: {detail}")]
    CaseNotSatisfied { n: usize, k: usize, detail: String },
    #[error("tower top field of order {0} exceeds the default cap")]
    TowerTooLarge(u64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("constructed code failed its claimed property: {0}")]
    PostconditionFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
