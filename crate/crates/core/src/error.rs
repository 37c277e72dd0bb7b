use thiserror::Error;

/// Which order axiom a candidate basis violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Independence,
    Unit,
    Closure,
    Integrality,
}

impl std::fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OrderAxiom::Independence => "independence",
            OrderAxiom::Unit => "unit",
            OrderAxiom::Closure => "closure",
            OrderAxiom::Integrality => "integrality",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument `{0}` must be nonzero")]
    ZeroArgument(&'static str),
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("Legendre symbol needs an odd prime modulus, got {0}")]
    InvalidModulus(i64),
    #[error("{0} is not square-free; normalize to its square-free part first")]
    NotSquareFree(i64),
    #[error("operands belong to different quaternion algebras")]
    AlgebraMismatch,
    #[error("search for an auxiliary prime for p = {0} exceeded the guard bound")]
    SearchBound(u64),
    #[error("order axiom failed ({axiom}): {detail}")]
    Order { axiom: OrderAxiom, detail: String },
    #[error("Gram determinant {0} is not a perfect square")]
    NonSquareGramDeterminant(String),
    #[error("maximalization made no progress at prime {0}")]
    MaximalizeStalled(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("the algebra Q({a}, {b}) is split (M_2(Q)); a division algebra is required")]
    SplitAlgebra { a: i64, b: i64 },
    #[error("the level prime {p} ramifies in the algebra; the cusp formula requires a prime at which the algebra splits")]
    RamifiedLevel { p: u64 },
    #[error("indefinite algebras need mu (units of the maximal order modulo the level) to be supplied")]
    MissingMu,
    #[error("mu only enters the cusp count for indefinite algebras")]
    MuNotApplicable,
    #[error("class number must be supplied: the discriminant {0} is not a prime of a definite algebra")]
    ClassNumberRequired(u64),
    #[error("class number and mu must be positive")]
    NonPositiveInput,
    #[error("cusp count {numerator}/{denominator} is not an integer")]
    NonIntegralCuspCount {
        numerator: String,
        denominator: String,
    },
    #[error("enumeration oracle only runs for q in {{2, 3}}, got {0}")]
    OracleRange(u64),
    #[error("torus degree must lie in 0..=4, got {0}")]
    BettiDegree(i64),
    #[error("cusp count must be at least 1")]
    CuspCountZero,
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// True for violations of a mathematical hypothesis (as opposed to a
    /// malformed argument).
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            Error::SplitAlgebra { .. }
                | Error::RamifiedLevel { .. }
                | Error::MissingMu
                | Error::MuNotApplicable
                | Error::ClassNumberRequired(_)
                | Error::NonIntegralCuspCount { .. }
                | Error::Order { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
