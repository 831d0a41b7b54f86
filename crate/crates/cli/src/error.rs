use std::fmt;

use cga_core::Backend;
use thiserror::Error;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("illegal character `{0}` at {1}")]
    IllegalChar(char, Pos),
    #[error("syntax error at {1}: {0}")]
    Syntax(String, Pos),
    #[error("syntax error: unexpected end of input, {0}")]
    UnexpectedEnd(String),
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{name}` takes {expected} argument(s), got {got}")]
    Arity { name: String, expected: &'static str, got: usize },
    #[error("free symbol `{name}` is not allowed in the {backend} backend (switch with :backend symbolic)")]
    FreeSymbol { name: String, backend: Backend },
    #[error("{0}")]
    Type(String),
    #[error("{0}")]
    Backend(String),
    #[error(transparent)]
    Core(#[from] cga_core::Error),
}

impl From<cga_core::ScalarError> for EvalError {
    fn from(e: cga_core::ScalarError) -> Self {
        EvalError::Core(e.into())
    }
}

/// Any failure of a statement, with the exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Eval(_) | CliError::Io(_) => 1,
        }
    }
}
