use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("relation ideal is not admissible within path length bound {0}")]
    NotAdmissible(usize),
    #[error("algebra validation failed: {0}")]
    Validation(String),
    #[error("non-integer structure constant {0}")]
    NonIntegerConstant(String),

    #[error("modules live over different algebras")]
    OwnerMismatch,
    #[error("module validation failed: {0}")]
    Module(String),
    #[error("summand {0} is not indecomposable")]
    NotIndecomposable(usize),
    #[error("summands {0} and {1} are isomorphic")]
    DuplicateSummand(usize, usize),
    #[error("endomorphism ring of summand {0} is not split local")]
    NonSplitLocal(usize),
    #[error("cannot certify: {0}")]
    CannotCertify(String),

    #[error("resolution undetermined at depth {0}")]
    ResolutionUnknown(usize),
    #[error("bookkeeping mismatch: {0}")]
    Bookkeeping(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("iterated chain failed at step {step}: {reason}")]
    Chain { step: usize, reason: String },
    #[error("unknown scenario {0}")]
    UnknownScenario(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
