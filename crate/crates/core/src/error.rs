use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matroid has no bases")]
    EmptyBases,
    #[error("bases have unequal sizes ({0} and {1})")]
    UnequalBasisSizes(usize, usize),
    #[error("basis exchange fails for bases {b1:?} and {b2:?} removing element {element}")]
    ExchangeAxiomViolated {
        b1: Vec<usize>,
        b2: Vec<usize>,
        element: usize,
    },
    #[error("element {element} out of range for a ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("subset {0:?} is not a strictly increasing list of elements")]
    MalformedSubset(Vec<usize>),
    #[error("invalid rank {r} for a ground set of size {n}")]
    InvalidRank { r: usize, n: usize },
    #[error("ground set size {n} exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("basis count {b} outside [{min}, {max}]")]
    BasisCountOutOfRange { b: u64, min: u64, max: u64 },
    #[error("monomials over {0} and {1} indeterminates cannot be compared")]
    DimensionMismatch(usize, usize),
    #[error("h_r = {h_r} is below f(r,d) = {f}")]
    HrBelowF { h_r: u64, f: u64 },
    #[error("h_r = {h_r} exceeds the {max} available monomials of degree r")]
    HrAboveMax { h_r: u64, max: u64 },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("gcd(r+d, r) = {0} is not 1")]
    NotCoprime(u64),
    #[error("{0}")]
    CapExceeded(String),
    #[error("partition family has no bases: some block contains every r-subset")]
    NoBases,
    #[error("invalid partition family: {0}")]
    InvalidPartition(String),
    #[error("blocks have unequal sizes ({0} and {1})")]
    UnequalBlockSizes(usize, usize),
    #[error("design is not a Steiner system S(k-1,k,n)")]
    NotSteiner,
    #[error("lambda = {lambda} is not a valid number of circuit-hyperplanes for n = {n}, r = {r}")]
    InvalidLambda { n: usize, r: usize, lambda: u64 },
    #[error("class of matroids is empty")]
    EmptyClass,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
