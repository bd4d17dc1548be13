use thiserror::Error;

/// Errors raised while building or querying semigroups, ideals and bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {0})")]
    NotCoprime(u64),
    #[error("not a numerical semigroup: {0} + {1} = {2} is listed as a gap")]
    NotASemigroup(u64, u64, u64),
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),
    #[error("semigroup too large for the membership table (conductor bound {0})")]
    TooLarge(u64),
    #[error("complement is not closed under divisors: {divisor} divides {element} but is missing")]
    NotAnIdeal { element: u64, divisor: u64 },
    #[error("ideals live in different ambient semigroups")]
    AmbientMismatch,
    #[error("the ideal has difference 0")]
    ZeroDifference,
    #[error("the semigroup is not symmetric")]
    NotSymmetric,
    #[error("order r = {0} is out of range")]
    InvalidOrder(usize),
    #[error("run length ell = {0} is out of range")]
    InvalidEll(usize),
    #[error("no set of size {r} in [{a1}, {ar}] with endpoints fixed contains {ell} consecutive integers")]
    EmptyFamily {
        a1: i64,
        ar: i64,
        r: usize,
        ell: usize,
    },
    #[error("lambda_m = {0} is below the conductor")]
    ConductorNotReached(u64),
    #[error("search budget of {0} union evaluations exceeded")]
    BudgetExceeded(u64),
    #[error("invalid interval family parameters a = {a}, x = {x}")]
    BadInterval { a: u64, x: u64 },
    #[error("inductive constraint violated: {0}")]
    ConstraintViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
