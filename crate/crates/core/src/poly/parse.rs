//! Tokenizer and polynomial expression grammar.
//!
//! Expressions are built from identifiers, integer literals, `p/q` rational
//! literals, `+ - * ^` and parentheses. Juxtaposition is not multiplication.
//! `#` starts a comment running to the end of the line. The token stream is
//! public so that document-level grammars can embed polynomial expressions.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::field::{Field, Rational};

use super::polynomial::Polynomial;
use super::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Int(n) => format!("integer `{n}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Semi => "`;`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

/// Syntax error with a 1-based position and the set of tokens that would
/// have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub found: String,
    pub expected: Vec<String>,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.col)?;
        if let Some(m) = &self.message {
            return write!(f, "{m}");
        }
        write!(f, "found {}, expected ", self.found)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing"),
            [one] => write!(f, "{one}"),
            many => write!(f, "one of {}", many.join(", ")),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if ch == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        if ch.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let kind = if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            TokenKind::Ident(s)
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            TokenKind::Int(s.parse().expect("digits parse as an integer"))
        } else {
            bump(&mut chars);
            match ch {
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '[' => TokenKind::LBracket,
                ']' => TokenKind::RBracket,
                ',' => TokenKind::Comma,
                ';' => TokenKind::Semi,
                ':' => TokenKind::Colon,
                other => {
                    return Err(ParseError {
                        line: tl,
                        col: tc,
                        found: format!("character `{other}`"),
                        expected: vec![],
                        message: Some(format!("unexpected character `{other}`")),
                    })
                }
            }
        };
        out.push(Token { kind, line: tl, col: tc });
    }
    out.push(Token { kind: TokenKind::Eof, line, col });
    Ok(out)
}

pub struct TokenStream {
    tokens: Vec<Token>,
    pos: usize,
}

impl TokenStream {
    pub fn new(text: &str) -> Result<Self, ParseError> {
        Ok(TokenStream { tokens: tokenize(text)?, pos: 0 })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub fn next_token(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    pub fn at(&self, kind: &TokenKind) -> bool {
        &self.peek().kind == kind
    }

    pub fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.at(kind) {
            self.next_token();
            true
        } else {
            false
        }
    }

    pub fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            found: t.kind.describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: None,
        }
    }

    pub fn error_msg(&self, msg: impl Into<String>) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            found: t.kind.describe(),
            expected: vec![],
            message: Some(msg.into()),
        }
    }

    pub fn expect(&mut self, kind: &TokenKind, label: &str) -> Result<Token, ParseError> {
        if self.at(kind) {
            Ok(self.next_token())
        } else {
            Err(self.error(&[label]))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, ParseError> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                self.next_token();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    pub fn expect_usize(&mut self) -> Result<usize, ParseError> {
        match &self.peek().kind {
            TokenKind::Int(n) => match n.to_usize() {
                Some(v) => {
                    self.next_token();
                    Ok(v)
                }
                None => Err(self.error_msg("integer out of range")),
            },
            _ => Err(self.error(&["integer"])),
        }
    }

    /// Parse one polynomial expression; stops before the first token that
    /// cannot continue it.
    pub fn parse_expr<F: Field>(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial<F>, ParseError> {
        let negate = if self.eat(&TokenKind::Minus) {
            true
        } else {
            self.eat(&TokenKind::Plus);
            false
        };
        let mut acc = self.parse_term(ring)?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&TokenKind::Plus) {
                acc = &acc + &self.parse_term(ring)?;
            } else if self.eat(&TokenKind::Minus) {
                acc = &acc - &self.parse_term(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term<F: Field>(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.parse_factor(ring)?;
        while self.eat(&TokenKind::Star) {
            acc = &acc * &self.parse_factor(ring)?;
        }
        Ok(acc)
    }

    fn parse_factor<F: Field>(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial<F>, ParseError> {
        let base = self.parse_atom(ring)?;
        if self.eat(&TokenKind::Caret) {
            let e = self.expect_usize()?;
            let e = u32::try_from(e).map_err(|_| self.error_msg("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_atom<F: Field>(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial<F>, ParseError> {
        const OPERAND: [&str; 3] = ["identifier", "number", "`(`"];
        match self.peek().kind.clone() {
            TokenKind::Ident(name) => match ring.var_index(&name) {
                Some(i) => {
                    self.next_token();
                    Ok(Polynomial::var(ring, i))
                }
                None => Err(self.error_msg(format!("undeclared variable `{name}`"))),
            },
            TokenKind::Int(n) => {
                self.next_token();
                let mut value = Rational::from_integer(n);
                if self.eat(&TokenKind::Slash) {
                    let d = match &self.peek().kind {
                        TokenKind::Int(d) => d.clone(),
                        _ => return Err(self.error(&["integer"])),
                    };
                    if d.is_zero() {
                        return Err(self.error_msg("zero denominator"));
                    }
                    self.next_token();
                    value /= Rational::from_integer(d);
                }
                let c = F::from_rational(&value)
                    .ok_or_else(|| self.error_msg("literal not representable in the coefficient field"))?;
                Ok(Polynomial::constant(ring, c))
            }
            TokenKind::LParen => {
                self.next_token();
                let inner = self.parse_expr(ring)?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

impl TokenStream {
    /// `[ p, p, ...; p, p, ... ]`, returning the rows as parsed.
    pub fn parse_matrix<F: Field>(&mut self, ring: &Arc<PolyRing>) -> Result<Vec<Vec<Polynomial<F>>>, ParseError> {
        self.expect(&TokenKind::LBracket, "`[`")?;
        let mut rows = vec![vec![]];
        if self.eat(&TokenKind::RBracket) {
            return Ok(vec![]);
        }
        loop {
            rows.last_mut().expect("at least one row").push(self.parse_expr(ring)?);
            if self.eat(&TokenKind::Comma) {
                continue;
            }
            if self.eat(&TokenKind::Semi) {
                rows.push(vec![]);
                continue;
            }
            if self.eat(&TokenKind::RBracket) {
                return Ok(rows);
            }
            return Err(self.error(&["`,`", "`;`", "`]`", "`+`", "`-`", "`*`", "`^`"]));
        }
    }
}

/// Parse a bracketed matrix literal.
pub fn parse_matrix_literal<F: Field>(
    ring: &Arc<PolyRing>,
    text: &str,
) -> Result<Vec<Vec<Polynomial<F>>>, ParseError> {
    let mut ts = TokenStream::new(text)?;
    let rows = ts.parse_matrix(ring)?;
    if !ts.at(&TokenKind::Eof) {
        return Err(ts.error(&["end of input"]));
    }
    Ok(rows)
}

/// Parse a complete polynomial expression.
pub fn parse_polynomial<F: Field>(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial<F>, ParseError> {
    let mut ts = TokenStream::new(text)?;
    let p = ts.parse_expr(ring)?;
    if !ts.at(&TokenKind::Eof) {
        return Err(ts.error(&["`+`", "`-`", "`*`", "`^`", "end of input"]));
    }
    Ok(p)
}

impl<F: Field> Polynomial<F> {
    /// Parse an expression in the given ring; panics on malformed input.
    /// Intended for fixed literals in builders and tests.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Self {
        parse_polynomial(ring, text).unwrap_or_else(|e| panic!("bad polynomial literal `{text}`: {e}"))
    }
}
