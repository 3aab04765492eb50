use std::fmt;

use thiserror::Error;

/// 1-based line and column of a source range, with its length in characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl Span {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        Span { line, column, length: length.max(1) }
    }

    /// From the start of `self` to the end of `other` (when on the same line;
    /// otherwise the first span is kept).
    pub fn to(self, other: Span) -> Span {
        if other.line == self.line && other.column + other.length >= self.column {
            Span::new(self.line, self.column, other.column + other.length - self.column)
        } else {
            self
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("{span}: unexpected character `{found}`")]
    Lex { span: Span, found: char },
    #[error("{span}: expected {}, found {found}", expected.join(" or "))]
    Parse { span: Span, expected: Vec<String>, found: String },
    #[error("{span}: {message}")]
    Name { span: Span, message: String },
    #[error("{span}: expected {expected}, found {found}")]
    TypeMismatch { span: Span, expected: String, found: String },
    #[error("{span}: piecewise domain has a gap before this interval")]
    DomainGap { span: Span },
    #[error("{span}: piecewise domain overlaps at this interval")]
    DomainOverlap { span: Span },
    #[error("{span}: constraint `{constraint}` violated: {detail}")]
    ConstraintViolation { span: Span, constraint: String, detail: String },
}

impl DslError {
    pub fn span(&self) -> Span {
        match self {
            DslError::Lex { span, .. }
            | DslError::Parse { span, .. }
            | DslError::Name { span, .. }
            | DslError::TypeMismatch { span, .. }
            | DslError::DomainGap { span }
            | DslError::DomainOverlap { span }
            | DslError::ConstraintViolation { span, .. } => *span,
        }
    }

    pub fn constraint(span: Span, constraint: impl Into<String>, detail: impl fmt::Display) -> Self {
        DslError::ConstraintViolation { span, constraint: constraint.into(), detail: detail.to_string() }
    }
}
