//! A small declaration language for fuzzy operators, fuzzy subsets and check
//! directives, with a hand-written lexer and recursive-descent parser.

pub mod ast;
pub mod elab;
mod error;
pub mod exec;
pub mod lexer;
pub mod parser;
pub mod pretty;

pub use elab::{elaborate, Checked};
pub use error::{DslError, Span};
pub use exec::{execute, run_source, CheckOutcome, ExecOptions, Line, LineKind};
pub use lexer::tokenize;
pub use parser::parse;
pub use pretty::pretty;

/// Tokenizes and parses `text`.
pub fn parse_str(text: &str) -> Result<ast::Program, DslError> {
    parse(&tokenize(text)?)
}
