use std::fmt::Write;

use crate::ast::*;

/// Renders a program back to source text, one statement per line.
pub fn pretty(program: &Program) -> String {
    let mut out = String::new();
    for stmt in &program.stmts {
        stmt_to(&mut out, stmt);
        out.push_str(";\n");
    }
    out
}

pub fn pretty_expr(expr: &Expr) -> String {
    let mut out = String::new();
    expr_to(&mut out, expr);
    out
}

fn stmt_to(out: &mut String, stmt: &Stmt) {
    match stmt {
        Stmt::Let { name, value, .. } => {
            let _ = write!(out, "let {} = ", name.name);
            match value {
                Value::Expr(e) => expr_to(out, e),
                Value::Piecewise { param, pieces, .. } => {
                    let _ = write!(out, "piecewise({}) {{", param.name);
                    for piece in pieces {
                        let iv = &piece.interval;
                        out.push_str("\n    ");
                        out.push(if iv.lo_closed { '[' } else { '(' });
                        num_to(out, &iv.lo);
                        out.push_str(", ");
                        num_to(out, &iv.hi);
                        out.push(if iv.hi_closed { ']' } else { ')' });
                        out.push_str(" -> ");
                        expr_to(out, &piece.body);
                        out.push(';');
                    }
                    out.push_str("\n}");
                }
            }
        }
        Stmt::Check { name, args, domain, .. } => {
            let _ = write!(out, "check {}(", name.name);
            list_to(out, args);
            out.push(')');
            match domain {
                None => {}
                Some(Domain::Grid { n, .. }) => {
                    out.push_str(" on grid(");
                    num_to(out, n);
                    out.push(')');
                }
                Some(Domain::Samples { values, .. }) => {
                    out.push_str(" on samples { ");
                    for (i, v) in values.iter().enumerate() {
                        if i > 0 {
                            out.push_str(", ");
                        }
                        num_to(out, v);
                    }
                    out.push_str(" }");
                }
            }
        }
    }
}

fn num_to(out: &mut String, n: &Num) {
    if n.negative {
        out.push('-');
    }
    out.push_str(&n.text);
}

fn list_to(out: &mut String, items: &[Expr]) {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        expr_to(out, e);
    }
}

fn table_to(out: &mut String, t: &Table) {
    out.push_str("table {");
    for (i, row) in t.rows.iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        out.push(' ');
        list_to(out, row);
    }
    if t.trailing_semi {
        out.push(';');
    }
    out.push_str(" }");
}

fn expr_to(out: &mut String, e: &Expr) {
    match e {
        Expr::Num { text, .. } => out.push_str(text),
        Expr::Inf { .. } => out.push_str("inf"),
        Expr::Var(id) => out.push_str(&id.name),
        Expr::Neg { expr, .. } => {
            out.push('-');
            expr_to(out, expr);
        }
        Expr::Bin { op, lhs, rhs, .. } => {
            expr_to(out, lhs);
            if *op == BinOp::Pow {
                out.push('^');
            } else {
                let _ = write!(out, " {} ", op.symbol());
            }
            expr_to(out, rhs);
        }
        Expr::Call { name, args, .. } => {
            let _ = write!(out, "{}(", name.name);
            list_to(out, args);
            out.push(')');
        }
        Expr::Paren { expr, .. } => {
            out.push('(');
            expr_to(out, expr);
            out.push(')');
        }
        Expr::Tuple { items, .. } => {
            out.push('(');
            list_to(out, items);
            out.push(')');
        }
        Expr::Table(t) => table_to(out, t),
        Expr::Lambda { param, body, .. } => {
            let _ = write!(out, "fn({}) ", param.name);
            expr_to(out, body);
        }
        Expr::Ctor { kind, ctor, .. } => {
            out.push_str(&kind.name);
            match ctor {
                Ctor::Named { name, args } => {
                    let _ = write!(out, " {}", name.name);
                    if let Some(args) = args {
                        out.push('(');
                        list_to(out, args);
                        out.push(')');
                    }
                }
                Ctor::Args(args) => {
                    out.push('(');
                    list_to(out, args);
                    out.push(')');
                }
                Ctor::Table(t) => {
                    out.push(' ');
                    table_to(out, t);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;
    use crate::parser::parse;

    fn texts(s: &str) -> Vec<String> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind.text().to_string()).collect()
    }

    #[test]
    fn token_content_survives() {
        for src in [
            "let a = -2^-1 + (3 * x) / f(1, 2);",
            "let e = indist table { 1, 0.5; 0.5, 1; };",
            "let n = nullnorm(tconorm max, 0.3, tnorm product); check vaguemonoid(a, E, V) on samples { -1, inf };",
            "let h = piecewise(x) { [0, 0.5) -> ln(2*x); [0.5, 1] -> -ln(2 - 2*x); };",
        ] {
            let printed = pretty(&parse(&tokenize(src).unwrap()).unwrap());
            assert_eq!(texts(src), texts(&printed), "{printed}");
        }
    }
}
