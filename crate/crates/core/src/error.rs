use thiserror::Error;

/// Everything that can go wrong while building or classifying semigroups,
/// ideals and duplications.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("gcd of generators is {0}, not 1 (complement would be infinite)")]
    GcdNotOne(i64),
    #[error("arithmetic overflow: values must stay below {limit} so that doubling cannot wrap")]
    Overflow { limit: i64 },
    #[error("budget exceeded: {what} (limit {limit}, requested {requested})")]
    BudgetExceeded {
        what: &'static str,
        limit: i64,
        requested: i64,
    },
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(i64),
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,
    #[error("second ideal is not contained in the first")]
    NotNested,
    #[error("b = {0} is even; the duplication parameter must be odd")]
    EvenB(i64),
    #[error("b = {0} is not an element of the base semigroup")]
    BNotInS(i64),
    #[error("ideal is not contained in the base semigroup (use auto translation)")]
    IdealNotIntegral,
    #[error("duplication is not almost Gorenstein")]
    NotAlmostGorenstein,
    #[error("improper semigroup: the operation needs a semigroup other than N")]
    ImproperSemigroup,
    #[error("{0} is not a semigroup between S and (M - M)")]
    NotIntermediate(String),
    #[error("shift {0} does not move the dual into the base semigroup")]
    NotIntegralShift(i64),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
