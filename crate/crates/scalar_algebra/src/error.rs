use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("matrix is not square ({rows}x{cols})")]
    Shape { rows: usize, cols: usize },
    #[error("not divisible: {0}")]
    Divisibility(String),
    #[error("input is not skew under the group action")]
    NotSkew,
    #[error("cannot parse rational {0:?}")]
    ParseRat(String),
    #[error("division by zero")]
    DivisionByZero,
}
