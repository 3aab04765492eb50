use crate::error::Span;

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Let { name: Ident, value: Value, span: Span },
    Check { name: Ident, args: Vec<Expr>, domain: Option<Domain>, span: Span },
}

impl Stmt {
    pub fn span(&self) -> Span {
        match self {
            Stmt::Let { span, .. } | Stmt::Check { span, .. } => *span,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Piecewise { param: Ident, pieces: Vec<Piece>, span: Span },
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub interval: Interval,
    pub body: Expr,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo_closed: bool,
    pub lo: Num,
    pub hi: Num,
    pub hi_closed: bool,
    pub span: Span,
}

/// A literal bound: optional sign, then a number or `inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct Num {
    pub negative: bool,
    /// Source text without the sign (`inf` for infinity).
    pub text: String,
    pub value: f64,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    Grid { n: Num, span: Span },
    Samples { values: Vec<Num>, span: Span },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ctor {
    /// `uninorm rep(h, 0.5, conjunctive)` or `tnorm product`
    Named { name: Ident, args: Option<Vec<Expr>> },
    /// `nullnorm(S, 0.5, T)`
    Args(Vec<Expr>),
    /// `indist table { .. }`
    Table(Table),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub rows: Vec<Vec<Expr>>,
    /// A `;` directly before the closing brace.
    pub trailing_semi: bool,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num { text: String, value: f64, span: Span },
    Inf { span: Span },
    Var(Ident),
    Neg { expr: Box<Expr>, span: Span },
    Bin { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr>, span: Span },
    Call { name: Ident, args: Vec<Expr>, span: Span },
    Paren { expr: Box<Expr>, span: Span },
    Tuple { items: Vec<Expr>, span: Span },
    Table(Table),
    Lambda { param: Ident, body: Box<Expr>, span: Span },
    Ctor { kind: Ident, ctor: Ctor, span: Span },
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Num { span, .. }
            | Expr::Inf { span }
            | Expr::Neg { span, .. }
            | Expr::Bin { span, .. }
            | Expr::Call { span, .. }
            | Expr::Paren { span, .. }
            | Expr::Tuple { span, .. }
            | Expr::Lambda { span, .. }
            | Expr::Ctor { span, .. } => *span,
            Expr::Var(id) => id.span,
            Expr::Table(t) => t.span,
        }
    }
}
