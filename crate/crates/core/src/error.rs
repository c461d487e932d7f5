use thiserror::Error;

/// A single defect found while validating a group specification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("need at least 2 factors, got {0}")]
    TooFewFactors(usize),
    #[error("factor {factor}: trivial group (order {order})")]
    TrivialFactor { factor: usize, order: usize },
    #[error("factor {factor}: multiplication table has {got} entries, expected {expected}")]
    BadTableShape {
        factor: usize,
        got: usize,
        expected: usize,
    },
    #[error("factor {factor}: element id {id} out of range (size {size})")]
    ElementOutOfRange { factor: usize, id: usize, size: usize },
    #[error("factor {factor}: identity {identity} fails on element {id}")]
    BadIdentity {
        factor: usize,
        identity: usize,
        id: usize,
    },
    #[error("factor {factor}: element {id} has no two-sided inverse")]
    MissingInverse { factor: usize, id: usize },
    #[error("factor {factor}: associativity fails on triple ({a},{b},{c})")]
    NonAssociative {
        factor: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("generator `{name}`: factor index {factor} out of range")]
    GeneratorBadFactor { name: String, factor: usize },
    #[error("generator `{name}`: element {elem} is not a non-identity element of factor {factor}")]
    GeneratorBadElement {
        name: String,
        factor: usize,
        elem: i64,
    },
    #[error("generator `{name}`: not a valid identifier")]
    GeneratorBadName { name: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),
    #[error("malformed group spec: {0}")]
    MalformedSpec(#[from] serde_json::Error),
    #[error("cannot read group spec: {0}")]
    SpecIo(#[from] std::io::Error),
    #[error("letters from factors {0} and {1} are not multipliable")]
    NotMultipliable(usize, usize),
    #[error("invalid letter: {0}")]
    InvalidLetter(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("letter exponent overflow: infinite-cyclic exponents are limited to |e| < 2^62")]
    ExponentOverflow,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
    #[error("suite {suite} does not apply here: {reason}")]
    Inapplicable { suite: String, reason: String },
    #[error("letter budget exceeded at level {level}: {used} letters used, budget {budget}")]
    BudgetExceeded {
        level: usize,
        used: u64,
        budget: u64,
    },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// Violations behind an `InvalidSpec`, if that is what this error is.
    pub fn violations(&self) -> Option<&[Violation]> {
        match self {
            Error::InvalidSpec(v) => Some(v),
            _ => None,
        }
    }
}
