use thiserror::Error;

/// Errors produced by the calendar library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: modulus must be positive")]
    InvalidModulus(i64),

    #[error("{a} has no inverse modulo {m} (gcd is {gcd})")]
    NoInverse { a: i64, m: i64, gcd: i64 },

    #[error("moduli {m1} and {m2} are not coprime")]
    NotCoprime { m1: i64, m2: i64 },

    #[error("expected a residue modulo {expected}, got one modulo {found}")]
    ModulusMismatch { expected: i64, found: i64 },

    #[error("invalid day name `{input}`: {reason} (offending token `{token}`)")]
    ParseName {
        input: String,
        token: String,
        reason: &'static str,
    },

    #[error("invalid day number `{0}`: expected an integer in 1..=260")]
    ParseDay(String),

    #[error("{what} {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("sign table must have exactly 20 entries, got {0}")]
    SignTableSize(usize),

    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(PermutationDefect),
}

/// What is wrong with a proposed point-to-image map.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationDefect {
    #[error("point {0} is listed more than once")]
    DuplicatePoint(usize),
    #[error("point {0} has no image")]
    MissingPoint(usize),
    #[error("image {0} is hit more than once")]
    DuplicateImage(usize),
    #[error("label {label} is outside 0..{degree}")]
    OutOfDomain { label: usize, degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
