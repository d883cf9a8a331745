use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point s = {point}")]
    PoleAtEvaluationPoint { point: String },
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("table mismatch in {table} at {index}: expected {expected}, computed {computed}")]
    TableMismatch {
        table: String,
        index: String,
        expected: String,
        computed: String,
    },
    #[error("t extraction ambiguous: {0}")]
    TExtractionAmbiguous(String),
    #[error("sort error: {0}")]
    SortError(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: String, name: String },
    #[error("malformed fixture {name}: {msg}")]
    Fixture { name: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
