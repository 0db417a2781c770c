use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("line {line}: expected {expected} attributes, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: attribute {column} is not a number: {value:?}")]
    NonNumeric {
        line: usize,
        column: usize,
        value: String,
    },
    #[error("line {line}: empty class name")]
    EmptyClassName { line: usize },
    #[error("value {value} does not fit in {width} bits")]
    WidthExceeded { value: u64, width: u32 },
    #[error("attribute {attribute} of record {record}: {value} is not integral after scaling by {scale}")]
    NonIntegral {
        record: usize,
        attribute: usize,
        value: String,
        scale: u32,
    },
    #[error("invalid binarization: {0}")]
    Binarization(String),
    #[error("dataset needs at least 2 patterns, found {0}")]
    TooFewPatterns(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("threshold T = {t} must exceed k = {k}")]
    ThresholdTooSmall { t: usize, k: usize },
    #[error("no probability mass on the |0> branch (P0 = 0)")]
    DegenerateQuery,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
    #[error("layout needs {needed} qubits, ceiling is {ceiling}")]
    QubitCeiling { needed: usize, ceiling: usize },
    #[error("duplicate element under the order relation: {0}")]
    DuplicateElement(u64),
    #[error("register index {index} out of range (m = {m})")]
    RegisterIndex { index: usize, m: usize },
    #[error("state does not match layout: {0}")]
    LayoutMismatch(String),
    #[error("enumeration budget exceeded: {needed} tuples > {budget}")]
    EnumerationBudget { needed: u128, budget: u128 },
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
