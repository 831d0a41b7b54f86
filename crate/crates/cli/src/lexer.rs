//! Tokenizer for the calculator language.

use std::fmt;

use cga_core::Generator;

use crate::error::{ParseError, Pos};

#[derive(Clone, Debug, PartialEq)]
pub enum TokenKind {
    /// Literal text of an integer, decimal or `p/q` rational.
    Number(String),
    Ident(String),
    /// `e[...]` with its indices in written order.
    Basis(Vec<Generator>),
    Plus,
    Minus,
    Star,
    Caret,
    Bar,
    Slash,
    Assign,
    LParen,
    RParen,
    Comma,
    Semicolon,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Number(n) => write!(f, "number {n}"),
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Basis(g) => {
                let labels: Vec<&str> = g.iter().map(|g| g.label()).collect();
                write!(f, "e[{}]", labels.join(","))
            }
            TokenKind::Plus => f.write_str("`+`"),
            TokenKind::Minus => f.write_str("`-`"),
            TokenKind::Star => f.write_str("`*`"),
            TokenKind::Caret => f.write_str("`^`"),
            TokenKind::Bar => f.write_str("`|`"),
            TokenKind::Slash => f.write_str("`/`"),
            TokenKind::Assign => f.write_str("`=`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Semicolon => f.write_str("`;`"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn take_while(&mut self, out: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek().filter(|c| pred(*c)) {
            out.push(c);
            self.bump();
        }
    }
}

/// Tokenizes `input`; positions start at `line`, column 1.
pub fn tokenize_at(input: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor { chars: input.chars().peekable(), pos: Pos { line, col: 1 } };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let pos = cur.pos;
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let kind = match c {
            '0'..='9' | '.' => number(&mut cur, pos)?,
            'e' if is_basis_start(&cur) => basis(&mut cur, pos)?,
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                cur.take_while(&mut s, |c| c.is_ascii_alphanumeric());
                TokenKind::Ident(s)
            }
            _ => {
                cur.bump();
                match c {
                    '+' => TokenKind::Plus,
                    '-' | '−' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '^' => TokenKind::Caret,
                    '|' => TokenKind::Bar,
                    '/' => TokenKind::Slash,
                    '=' => TokenKind::Assign,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    ';' => TokenKind::Semicolon,
                    other => return Err(ParseError::IllegalChar(other, pos)),
                }
            }
        };
        tokens.push(Token { kind, pos });
    }
    Ok(tokens)
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    tokenize_at(input, 1)
}

/// `e` directly followed by `[`.
fn is_basis_start(cur: &Cursor<'_>) -> bool {
    let mut ahead = cur.chars.clone();
    ahead.next();
    ahead.next() == Some('[')
}

fn number(cur: &mut Cursor<'_>, pos: Pos) -> Result<TokenKind, ParseError> {
    let mut s = String::new();
    cur.take_while(&mut s, |c| c.is_ascii_digit());
    if cur.peek() == Some('.') {
        s.push('.');
        cur.bump();
        cur.take_while(&mut s, |c| c.is_ascii_digit());
    }
    if s == "." {
        return Err(ParseError::IllegalChar('.', pos));
    }
    // exponent only when digits follow, so `2e[1]` is not swallowed
    if matches!(cur.peek(), Some('e' | 'E')) {
        let mut ahead = cur.chars.clone();
        ahead.next();
        let sign = ahead.peek().copied().filter(|c| *c == '+' || *c == '-');
        if sign.is_some() {
            ahead.next();
        }
        if ahead.peek().is_some_and(|c| c.is_ascii_digit()) {
            s.push(cur.bump().unwrap());
            if sign.is_some() {
                s.push(cur.bump().unwrap());
            }
            cur.take_while(&mut s, |c| c.is_ascii_digit());
        }
    }
    // `p/q` with an integer numerator and denominator is one literal
    if !s.contains(['.', 'e', 'E']) && cur.peek() == Some('/') {
        let mut ahead = cur.chars.clone();
        ahead.next();
        if ahead.peek().is_some_and(|c| c.is_ascii_digit()) {
            cur.bump();
            s.push('/');
            cur.take_while(&mut s, |c| c.is_ascii_digit());
        }
    }
    Ok(TokenKind::Number(s))
}

fn basis(cur: &mut Cursor<'_>, pos: Pos) -> Result<TokenKind, ParseError> {
    cur.bump();
    cur.bump();
    let mut gens = Vec::new();
    loop {
        cur.take_while(&mut String::new(), char::is_whitespace);
        let at = cur.pos;
        let mut label = String::new();
        cur.take_while(&mut label, |c| c.is_alphanumeric() || c == '∞');
        if label.is_empty() {
            return match cur.peek() {
                Some(']') if gens.is_empty() => Err(ParseError::Syntax("empty basis group".into(), pos)),
                Some(c) => Err(ParseError::IllegalChar(c, cur.pos)),
                None => Err(ParseError::Syntax("unterminated basis group".into(), pos)),
            };
        }
        let g = label
            .parse::<Generator>()
            .map_err(|_| ParseError::Syntax(format!("unknown basis index `{label}`"), at))?;
        gens.push(g);
        cur.take_while(&mut String::new(), char::is_whitespace);
        match cur.bump() {
            Some(',') => continue,
            Some(']') => return Ok(TokenKind::Basis(gens)),
            Some(c) => return Err(ParseError::IllegalChar(c, at_prev(cur.pos))),
            None => return Err(ParseError::Syntax("unterminated basis group".into(), pos)),
        }
    }
}

fn at_prev(p: Pos) -> Pos {
    Pos { line: p.line, col: p.col.saturating_sub(1).max(1) }
}
