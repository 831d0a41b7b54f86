//! Calculator language for conformal geometric algebra: tokenizer, parser,
//! evaluator and the REPL / script runner behind the `cga` binary.

pub mod ast;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod repl;

pub use ast::{BinOp, Expr, Statement};
pub use error::{CliError, EvalError, ParseError, Pos};
pub use eval::{BladeDisplay, Outcome, Session, Value};
pub use parser::{parse_expr, parse_statement, parse_statement_at};
pub use repl::Runner;
