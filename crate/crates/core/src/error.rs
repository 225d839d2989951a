use thiserror::Error;

/// Errors raised by the algebra, module and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus (expected 2, 3, 5 or 7)")]
    UnsupportedField(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vectors are not linearly independent")]
    NotIndependent,

    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,

    #[error("field mismatch: F_{0} versus F_{1}")]
    FieldMismatch(u32, u32),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("relation {index} is not parallel: {detail}")]
    NonParallelRelation { index: usize, detail: String },

    #[error("inadmissible length bound {bound}: path {witness} is not in the ideal")]
    InadmissibleBound { bound: usize, witness: String },

    #[error("the ideal contains the unit; the quotient is the zero ring")]
    UnitInIdeal,

    #[error("action matrices do not define a module: {0}")]
    NotAModule(String),

    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),

    #[error("invalid theta data: {0}")]
    InvalidTheta(String),

    #[error("cocycle violates the module law: {0}")]
    InvalidCocycle(String),

    #[error("matrix is not a module homomorphism: {0}")]
    NotAMorphism(String),

    #[error("module is not projective: {0}")]
    NotProjective(String),

    #[error("search budget exhausted: {0}")]
    Inconclusive(String),

    #[error("could not certify indecomposability: {0}")]
    CertificationFailed(String),

    #[error("enumeration budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("pair module law fails: {0}")]
    PairLaw(String),

    #[error("instance fails validation: {0}")]
    InvalidInstance(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
