use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants carry enough context to be replayed: Jacobi violations name the
/// basis triple, budget errors name the enumeration that overflowed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalars belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field has characteristic zero")]
    NotPositiveCharacteristic,
    #[error("field is infinite")]
    InfiniteField,
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("linear system has no solution")]
    NoSolution,
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the target space")]
    NotContained,
    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}): residual {residual:?}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<String>,
    },
    #[error("alternating law violated at basis pair ({0}, {1})")]
    AlternatingViolation(usize, usize),
    #[error("basis index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("subspace is not closed: {0}")]
    NotClosed(String),

    #[error("acting subalgebra does not give a direct Fitting decomposition")]
    NotNilpotentAction,
    #[error("field too small: {reason}")]
    FieldTooSmall {
        reason: String,
        suggested_degree: Option<u32>,
    },
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("splitting failed: {0}")]
    SplitFailed(String),
    #[error("ideal decomposition mismatch: {0}")]
    DecompositionMismatch(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("method inapplicable: {0}")]
    MethodInapplicable(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("algebra is not monolithic ({0} minimal ideals)")]
    NotMonolithic(usize),
    #[error("algebra is not metabelian")]
    NotMetabelian,
    #[error("all {0} sampled elements satisfied the condition; over an infinite field this is inconclusive")]
    SamplingInconclusive(usize),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("characteristic {0} is excluded for this check")]
    CharacteristicExcluded(u64),
    #[error("algebra is not an A-algebra")]
    NotAAlgebra,
    #[error("a field of positive characteristic is required")]
    CharacteristicZero,
    #[error("characteristic mismatch: expected {expected}, found {found}")]
    CharacteristicMismatch { expected: u64, found: u64 },
    #[error("generation failed: {0}")]
    GenerationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
