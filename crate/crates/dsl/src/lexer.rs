use std::fmt;

use crate::error::{DslError, Span};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Let,
    Check,
    On,
    Fn,
    Piecewise,
    Table,
    Inf,
    /// `tnorm`, `uninorm`, `monoid`, ...
    Kind(String),
    Ident(String),
    Number(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Eq,
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

pub const CONSTRUCTOR_KINDS: &[&str] = &[
    "tnorm", "tconorm", "uninorm", "nullnorm", "monoid", "lattice", "indist", "fuzzyset", "vague", "carrier",
];

impl TokenKind {
    pub fn text(&self) -> &str {
        match self {
            TokenKind::Let => "let",
            TokenKind::Check => "check",
            TokenKind::On => "on",
            TokenKind::Fn => "fn",
            TokenKind::Piecewise => "piecewise",
            TokenKind::Table => "table",
            TokenKind::Inf => "inf",
            TokenKind::Kind(s) | TokenKind::Ident(s) | TokenKind::Number(s) => s,
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            TokenKind::LBrace => "{",
            TokenKind::RBrace => "}",
            TokenKind::Comma => ",",
            TokenKind::Semi => ";",
            TokenKind::Eq => "=",
            TokenKind::Arrow => "->",
            TokenKind::Plus => "+",
            TokenKind::Minus => "-",
            TokenKind::Star => "*",
            TokenKind::Slash => "/",
            TokenKind::Caret => "^",
        }
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Number(s) => write!(f, "number `{s}`"),
            other => write!(f, "`{}`", other.text()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn eat_while(&mut self, out: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            out.push(c);
            self.bump();
        }
    }
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let mut cur = Cursor { chars: text.chars().peekable(), line: 1, col: 1 };
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        let (line, col) = (cur.line, cur.col);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        let kind = if c.is_ascii_digit() || c == '.' {
            number(&mut cur, line, col)?
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            cur.eat_while(&mut s, |c| c.is_alphanumeric() || c == '_');
            cur.eat_while(&mut s, |c| c == '\'');
            match s.as_str() {
                "let" => TokenKind::Let,
                "check" => TokenKind::Check,
                "on" => TokenKind::On,
                "fn" => TokenKind::Fn,
                "piecewise" => TokenKind::Piecewise,
                "table" => TokenKind::Table,
                "inf" => TokenKind::Inf,
                k if CONSTRUCTOR_KINDS.contains(&k) => TokenKind::Kind(s),
                _ => TokenKind::Ident(s),
            }
        } else {
            cur.bump();
            match c {
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '[' => TokenKind::LBracket,
                ']' => TokenKind::RBracket,
                '{' => TokenKind::LBrace,
                '}' => TokenKind::RBrace,
                ',' => TokenKind::Comma,
                ';' => TokenKind::Semi,
                '=' => TokenKind::Eq,
                '+' => TokenKind::Plus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '-' if cur.peek() == Some('>') => {
                    cur.bump();
                    TokenKind::Arrow
                }
                '-' => TokenKind::Minus,
                other => {
                    return Err(DslError::Lex { span: Span::new(line, col, 1), found: other });
                }
            }
        };
        let len = kind.text().chars().count();
        out.push(Token { kind, span: Span::new(line, col, len) });
    }
    Ok(out)
}

fn number(cur: &mut Cursor, line: usize, col: usize) -> Result<TokenKind, DslError> {
    let mut s = String::new();
    cur.eat_while(&mut s, |c| c.is_ascii_digit());
    if cur.peek() == Some('.') {
        s.push('.');
        cur.bump();
        cur.eat_while(&mut s, |c| c.is_ascii_digit());
    }
    if matches!(cur.peek(), Some('e' | 'E')) {
        s.push(cur.bump().unwrap());
        if let Some(sign @ ('+' | '-')) = cur.peek() {
            s.push(sign);
            cur.bump();
        }
        cur.eat_while(&mut s, |c| c.is_ascii_digit());
    }
    if s.parse::<f64>().is_err() {
        let bad = s.chars().next().unwrap_or('.');
        return Err(DslError::Lex { span: Span::new(line, col, s.chars().count().max(1)), found: bad });
    }
    Ok(TokenKind::Number(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<String> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind.text().to_string()).collect()
    }

    #[test]
    fn simple_let() {
        assert_eq!(kinds("let t = fn(x) 1 - x;"), ["let", "t", "=", "fn", "(", "x", ")", "1", "-", "x", ";"]);
        let toks = tokenize("let t = fn(x) 1 - x;").unwrap();
        assert_eq!(toks[1].kind, TokenKind::Ident("t".into()));
        assert_eq!(toks[7].kind, TokenKind::Number("1".into()));
    }

    #[test]
    fn intervals_and_arrows() {
        assert_eq!(
            kinds("piecewise(x) { [0, 0.5) -> ln(2*x); }"),
            ["piecewise", "(", "x", ")", "{", "[", "0", ",", "0.5", ")", "->", "ln", "(", "2", "*", "x", ")", ";", "}"]
        );
    }

    #[test]
    fn unknown_character() {
        match tokenize("@") {
            Err(DslError::Lex { span, found }) => {
                assert_eq!((span.line, span.column), (1, 1));
                assert_eq!(found, '@');
            }
            other => panic!("{other:?}"),
        }
        let err = tokenize("let a = 1;\r\n  let b = $;").unwrap_err();
        assert_eq!((err.span().line, err.span().column), (2, 11));
    }

    #[test]
    fn comments_and_exponents() {
        assert_eq!(kinds("# hi\n1e-3 2.5E+2 e'"), ["1e-3", "2.5E+2", "e'"]);
        assert!(tokenize("1e").is_err());
    }
}
