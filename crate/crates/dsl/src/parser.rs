use crate::ast::*;
use crate::error::{DslError, Span};
use crate::lexer::{Token, TokenKind};

pub fn parse(tokens: &[Token]) -> Result<Program, DslError> {
    let mut p = Parser { toks: tokens, pos: 0 };
    let mut stmts = Vec::new();
    while !p.at_end() {
        stmts.push(p.stmt()?);
        p.expect(&TokenKind::Semi)?;
    }
    Ok(Program { stmts })
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn span_here(&self) -> Span {
        match self.toks.get(self.pos).or(self.toks.last()) {
            Some(t) => t.span,
            None => Span::new(1, 1, 1),
        }
    }

    fn prev_span(&self) -> Span {
        self.toks[self.pos.saturating_sub(1)].span
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let found = match self.toks.get(self.pos) {
            Some(t) => t.kind.to_string(),
            None => "end of input".to_string(),
        };
        DslError::Parse { span: self.span_here(), expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<Span, DslError> {
        if self.eat(kind) {
            Ok(self.prev_span())
        } else {
            Err(self.error(&[&format!("`{}`", kind.text())]))
        }
    }

    fn ident(&mut self) -> Result<Ident, DslError> {
        match self.peek() {
            Some(TokenKind::Ident(name)) => {
                let id = Ident { name: name.clone(), span: self.span_here() };
                self.pos += 1;
                Ok(id)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn stmt(&mut self) -> Result<Stmt, DslError> {
        let start = self.span_here();
        match self.peek() {
            Some(TokenKind::Let) => {
                self.pos += 1;
                let name = self.ident()?;
                self.expect(&TokenKind::Eq)?;
                let value = if self.peek() == Some(&TokenKind::Piecewise) { self.piecewise()? } else { Value::Expr(self.expr()?) };
                Ok(Stmt::Let { name, value, span: start.to(self.prev_span()) })
            }
            Some(TokenKind::Check) => {
                self.pos += 1;
                let name = match self.peek() {
                    Some(TokenKind::Kind(k)) => {
                        let id = Ident { name: k.clone(), span: self.span_here() };
                        self.pos += 1;
                        id
                    }
                    _ => self.ident()?,
                };
                self.expect(&TokenKind::LParen)?;
                let args = self.args(&TokenKind::RParen)?;
                let domain = if self.eat(&TokenKind::On) { Some(self.domain()?) } else { None };
                Ok(Stmt::Check { name, args, domain, span: start.to(self.prev_span()) })
            }
            _ => Err(self.error(&["`let`", "`check`"])),
        }
    }

    fn piecewise(&mut self) -> Result<Value, DslError> {
        let start = self.expect(&TokenKind::Piecewise)?;
        self.expect(&TokenKind::LParen)?;
        let param = self.ident()?;
        self.expect(&TokenKind::RParen)?;
        self.expect(&TokenKind::LBrace)?;
        let mut pieces = Vec::new();
        while !self.eat(&TokenKind::RBrace) {
            let interval = self.interval()?;
            self.expect(&TokenKind::Arrow)?;
            let body = self.expr()?;
            self.expect(&TokenKind::Semi)?;
            pieces.push(Piece { interval, body });
        }
        Ok(Value::Piecewise { param, pieces, span: start.to(self.prev_span()) })
    }

    fn interval(&mut self) -> Result<Interval, DslError> {
        let start = self.span_here();
        let lo_closed = match self.peek() {
            Some(TokenKind::LBracket) => true,
            Some(TokenKind::LParen) => false,
            _ => return Err(self.error(&["`[`", "`(`", "`}`"])),
        };
        self.pos += 1;
        let lo = self.num()?;
        self.expect(&TokenKind::Comma)?;
        let hi = self.num()?;
        let hi_closed = match self.peek() {
            Some(TokenKind::RBracket) => true,
            Some(TokenKind::RParen) => false,
            _ => return Err(self.error(&["`]`", "`)`"])),
        };
        self.pos += 1;
        Ok(Interval { lo_closed, lo, hi, hi_closed, span: start.to(self.prev_span()) })
    }

    fn num(&mut self) -> Result<Num, DslError> {
        let start = self.span_here();
        let negative = self.eat(&TokenKind::Minus);
        let (text, value) = match self.peek() {
            Some(TokenKind::Number(s)) => (s.clone(), s.parse::<f64>().unwrap_or(f64::NAN)),
            Some(TokenKind::Inf) => ("inf".to_string(), f64::INFINITY),
            _ => return Err(self.error(&["number", "`inf`"])),
        };
        self.pos += 1;
        let value = if negative { -value } else { value };
        Ok(Num { negative, text, value, span: start.to(self.prev_span()) })
    }

    fn domain(&mut self) -> Result<Domain, DslError> {
        let start = self.span_here();
        match self.peek() {
            Some(TokenKind::Ident(s)) if s == "grid" => {
                self.pos += 1;
                self.expect(&TokenKind::LParen)?;
                let n = self.num()?;
                self.expect(&TokenKind::RParen)?;
                Ok(Domain::Grid { n, span: start.to(self.prev_span()) })
            }
            Some(TokenKind::Ident(s)) if s == "samples" => {
                self.pos += 1;
                self.expect(&TokenKind::LBrace)?;
                let mut values = vec![self.num()?];
                while self.eat(&TokenKind::Comma) {
                    values.push(self.num()?);
                }
                self.expect(&TokenKind::RBrace)?;
                Ok(Domain::Samples { values, span: start.to(self.prev_span()) })
            }
            _ => Err(self.error(&["`grid`", "`samples`"])),
        }
    }

    /// Comma-separated expressions up to and including `close`.
    fn args(&mut self, close: &TokenKind) -> Result<Vec<Expr>, DslError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(&TokenKind::Comma) {
                return Err(self.error(&["`,`", &format!("`{}`", close.text())]));
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(TokenKind::Plus) => BinOp::Add,
                Some(TokenKind::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Bin { op, lhs: Box::new(lhs), rhs: Box::new(rhs), span };
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(TokenKind::Star) => BinOp::Mul,
                Some(TokenKind::Slash) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            let span = lhs.span().to(rhs.span());
            lhs = Expr::Bin { op, lhs: Box::new(lhs), rhs: Box::new(rhs), span };
        }
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        let start = self.span_here();
        if self.eat(&TokenKind::Minus) {
            let expr = self.unary()?;
            let span = start.to(expr.span());
            return Ok(Expr::Neg { expr: Box::new(expr), span });
        }
        let base = self.primary()?;
        if self.eat(&TokenKind::Caret) {
            let exp = self.unary()?;
            let span = base.span().to(exp.span());
            return Ok(Expr::Bin { op: BinOp::Pow, lhs: Box::new(base), rhs: Box::new(exp), span });
        }
        Ok(base)
    }

    fn table(&mut self) -> Result<Table, DslError> {
        let start = self.expect(&TokenKind::Table)?;
        self.expect(&TokenKind::LBrace)?;
        let mut rows = Vec::new();
        let mut row = Vec::new();
        let mut trailing_semi = false;
        loop {
            if self.eat(&TokenKind::RBrace) {
                trailing_semi = !rows.is_empty() && row.is_empty();
                break;
            }
            row.push(self.expr()?);
            if self.eat(&TokenKind::Comma) {
                continue;
            }
            if self.eat(&TokenKind::Semi) {
                rows.push(std::mem::take(&mut row));
                continue;
            }
            if self.eat(&TokenKind::RBrace) {
                break;
            }
            return Err(self.error(&["`,`", "`;`", "`}`"]));
        }
        if !row.is_empty() {
            rows.push(row);
        }
        Ok(Table { rows, trailing_semi, span: start.to(self.prev_span()) })
    }

    fn primary(&mut self) -> Result<Expr, DslError> {
        let start = self.span_here();
        match self.peek().cloned() {
            Some(TokenKind::Number(text)) => {
                self.pos += 1;
                let value = text.parse().unwrap_or(f64::NAN);
                Ok(Expr::Num { text, value, span: start })
            }
            Some(TokenKind::Inf) => {
                self.pos += 1;
                Ok(Expr::Inf { span: start })
            }
            Some(TokenKind::Ident(_)) => {
                let name = self.ident()?;
                if self.eat(&TokenKind::LParen) {
                    let args = self.args(&TokenKind::RParen)?;
                    Ok(Expr::Call { name, args, span: start.to(self.prev_span()) })
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(TokenKind::LParen) => {
                self.pos += 1;
                let mut items = self.args(&TokenKind::RParen)?;
                let span = start.to(self.prev_span());
                if items.len() == 1 {
                    Ok(Expr::Paren { expr: Box::new(items.pop().unwrap()), span })
                } else {
                    Ok(Expr::Tuple { items, span })
                }
            }
            Some(TokenKind::Table) => Ok(Expr::Table(self.table()?)),
            Some(TokenKind::Fn) => {
                self.pos += 1;
                self.expect(&TokenKind::LParen)?;
                let param = self.ident()?;
                self.expect(&TokenKind::RParen)?;
                let body = self.expr()?;
                let span = start.to(body.span());
                Ok(Expr::Lambda { param, body: Box::new(body), span })
            }
            Some(TokenKind::Kind(k)) => {
                self.pos += 1;
                let kind = Ident { name: k, span: start };
                let ctor = match self.peek() {
                    Some(TokenKind::Ident(_)) => {
                        let name = self.ident()?;
                        let args = if self.eat(&TokenKind::LParen) { Some(self.args(&TokenKind::RParen)?) } else { None };
                        Ctor::Named { name, args }
                    }
                    Some(TokenKind::LParen) => {
                        self.pos += 1;
                        Ctor::Args(self.args(&TokenKind::RParen)?)
                    }
                    Some(TokenKind::Table) => Ctor::Table(self.table()?),
                    _ => return Err(self.error(&["constructor name", "`(`", "`table`"])),
                };
                Ok(Expr::Ctor { kind, ctor, span: start.to(self.prev_span()) })
            }
            _ => Err(self.error(&["expression"])),
        }
    }
}
