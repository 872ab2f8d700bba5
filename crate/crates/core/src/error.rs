use thiserror::Error;

/// Errors raised by the engine and the presentation front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator name")]
    EmptySymbol,
    #[error("duplicate generator `{0}`")]
    DuplicateSymbol(String),
    #[error("letter {letter} out of range for an alphabet of {size} generators")]
    AlphabetMismatch { letter: u32, size: usize },
    #[error("operation on the zero element")]
    ZeroElement,
    #[error("zero relation")]
    ZeroRelation,
    #[error("step cap of {0} reductions exceeded")]
    StepCapExceeded(usize),
    #[error("mode {mode} does not apply to {shape} presentations")]
    IncompatibleMode {
        mode: &'static str,
        shape: &'static str,
    },
    #[error("monomial budget exceeded: {needed} monomials needed, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("module presentations need at least one module generator")]
    EmptyModuleAlphabet,
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("invalid conformal configuration: {0}")]
    InvalidConformal(String),
    #[error("completion did not close: {0}")]
    CompletionNotClosed(String),
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared generator `{name}`")]
    UndeclaredGenerator {
        line: usize,
        column: usize,
        name: String,
    },
    #[error(
        "{line}:{column}: symbolic coefficient `{name}` (only rational literals are supported)"
    )]
    SymbolicCoefficient {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}: {message}")]
    Presentation { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
