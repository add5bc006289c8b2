use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} and {modulus} are not coprime")]
    NotCoprime { value: i64, modulus: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(String),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("{0} is not squarefree")]
    NotSquarefree(i64),

    #[error("zero or constant polynomial where a positive degree is required")]
    ConstantPolynomial,

    #[error("polynomial {0} is not monic")]
    NotMonic(String),

    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),

    #[error("not a Weil number: {0}")]
    NotWeil(String),

    #[error("Hensel lifting did not stabilise for {poly} at p = {p} (precision reached p^{precision})")]
    PrecisionExhausted {
        poly: String,
        p: u64,
        precision: u32,
    },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("endomorphism algebra outside the two-type dichotomy: {0}")]
    DichotomyViolation(String),

    #[error("unknown witness id {0:?}")]
    UnknownWitness(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
