use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over GF({p})")]
    NotIrreducible { p: u64 },
    #[error("invalid extension modulus: {0}")]
    InvalidModulus(String),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a finite field")]
    NotFiniteField,
    #[error("operands belong to different fields")]
    CtxMismatch,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("linear factor has zero x and y coefficients")]
    DegenerateFactor,
    #[error("coefficient of x^{index} is nonzero inside the gap ({k}, {l})")]
    GapHypothesisFails { k: usize, l: usize, index: usize },
    #[error("invalid gap: need k < l, got k = {k}, l = {l}")]
    InvalidGap { k: usize, l: usize },
    #[error("sets must be nonempty")]
    EmptySet,
    #[error("coefficient hypothesis not met (row witness {}, column witness {})",
        if *.row_missing { "missing" } else { "found" },
        if *.col_missing { "missing" } else { "found" })]
    HypothesisNotMet { row_missing: bool, col_missing: bool },
    #[error("size guard failed: need |A| > {k} and |B| > {m}, got |A| = {na}, |B| = {nb}")]
    SizeGuard { k: usize, m: usize, na: usize, nb: usize },
    #[error("degree guard failed: deg Q must be below {limit}")]
    DegreeGuard { limit: usize },
    #[error("bound does not hold in characteristic 2")]
    CharTwo,
    #[error("pair with u = 0 is not allowed")]
    ZeroU,
    #[error("guard failed: {0}")]
    GuardFailed(String),
    #[error("duplicate element in set")]
    DuplicateElement,
    #[error("exhaustive sweep needs {needed} instances, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("polynomial does not vanish on the grid")]
    NotVanishing,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
