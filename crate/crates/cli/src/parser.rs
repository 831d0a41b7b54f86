//! Precedence-climbing parser.
//!
//! Loosest to tightest: assignment; `+ -`; `* ^ | /` (one left-associative
//! level); unary minus; calls and atoms.

use crate::ast::{BinOp, Expr, Statement};
use crate::error::{ParseError, Pos};
use crate::lexer::{tokenize_at, Token, TokenKind};

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    warnings: Vec<String>,
}

pub fn parse_statement(input: &str) -> Result<Statement, ParseError> {
    parse_statement_at(input, 1)
}

/// Parses one statement whose text starts on `line`.
pub fn parse_statement_at(input: &str, line: usize) -> Result<Statement, ParseError> {
    let tokens = tokenize_at(input, line)?;
    let mut p = Parser { tokens, at: 0, warnings: Vec::new() };
    let expr = p.assignment()?;
    let silent = p.eat(&TokenKind::Semicolon);
    if let Some(t) = p.peek() {
        return Err(ParseError::Syntax(format!("unexpected {}", t.kind), t.pos));
    }
    Ok(Statement { expr, silent, warnings: p.warnings })
}

/// Parses a single expression (no trailing `;`).
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let st = parse_statement(input)?;
    if st.silent {
        return Err(ParseError::Syntax("unexpected `;`".into(), Pos { line: 1, col: input.rfind(';').unwrap() + 1 }));
    }
    Ok(st.expr)
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek_kind() == Some(kind) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind, context: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t.kind == kind => Ok(()),
            Some(t) => Err(ParseError::Syntax(format!("expected {kind} {context}, found {}", t.kind), t.pos)),
            None => Err(ParseError::UnexpectedEnd(format!("expected {kind} {context}"))),
        }
    }

    fn at_assignment(&self) -> bool {
        matches!(self.peek_kind(), Some(TokenKind::Ident(_)))
            && matches!(self.tokens.get(self.at + 1).map(|t| &t.kind), Some(TokenKind::Assign))
    }

    fn assignment(&mut self) -> Result<Expr, ParseError> {
        if self.at_assignment() {
            let Some(Token { kind: TokenKind::Ident(name), .. }) = self.next() else { unreachable!() };
            self.next();
            let rhs = self.assignment()?;
            return Ok(Expr::Assign(name, Box::new(rhs)));
        }
        self.sum()
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Plus) => BinOp::Add,
                Some(TokenKind::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.product()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().map(|t| t.pos);
        let mut lhs = self.unary()?;
        let mut kinds: Vec<BinOp> = Vec::new();
        loop {
            let op = match self.peek_kind() {
                Some(TokenKind::Star) => BinOp::Mul,
                Some(TokenKind::Caret) => BinOp::Outer,
                Some(TokenKind::Bar) => BinOp::Contract,
                Some(TokenKind::Slash) => BinOp::Div,
                _ => break,
            };
            self.next();
            let rhs = self.unary()?;
            // scalar division sits with the geometric product
            let family = if op == BinOp::Div { BinOp::Mul } else { op };
            if !kinds.contains(&family) {
                kinds.push(family);
            }
            lhs = Expr::binary(op, lhs, rhs);
        }
        if kinds.len() > 1 {
            let pos = start.map(|p| format!(" at {p}")).unwrap_or_default();
            self.warnings.push(format!("mixed product chain{pos} evaluates left to right as {lhs}"));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(&TokenKind::Plus) {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.next() else {
            return Err(ParseError::UnexpectedEnd("expected an expression".into()));
        };
        match tok.kind {
            TokenKind::Number(n) => Ok(Expr::Number(n)),
            TokenKind::Basis(g) => Ok(Expr::Basis(g)),
            TokenKind::Ident(name) => {
                if self.eat(&TokenKind::LParen) {
                    let args = self.arguments()?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Ident(name))
                }
            }
            TokenKind::LParen => {
                let inner = self.sum()?;
                self.expect(TokenKind::RParen, "to close `(`")?;
                Ok(inner)
            }
            other => Err(ParseError::Syntax(format!("unexpected {other}"), tok.pos)),
        }
    }

    /// Call arguments after `(`; `name = value` is allowed for `subst`.
    fn arguments(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut args = Vec::new();
        if self.eat(&TokenKind::RParen) {
            return Ok(args);
        }
        loop {
            let arg = if self.at_assignment() {
                let Some(Token { kind: TokenKind::Ident(name), .. }) = self.next() else { unreachable!() };
                self.next();
                Expr::Assign(name, Box::new(self.sum()?))
            } else {
                self.sum()?
            };
            args.push(arg);
            if self.eat(&TokenKind::Comma) {
                continue;
            }
            self.expect(TokenKind::RParen, "after arguments")?;
            return Ok(args);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cga_core::Generator;

    fn ident(s: &str) -> Expr {
        Expr::Ident(s.into())
    }

    #[test]
    fn assignment_node() {
        let st = parse_statement("p = e[0] + X").unwrap();
        assert_eq!(
            st.expr,
            Expr::Assign("p".into(), Box::new(Expr::binary(BinOp::Add, Expr::Basis(vec![Generator::E0]), ident("X"))))
        );
        assert!(!st.silent);
        assert!(parse_statement("x = y = 2;").unwrap().silent);
    }

    #[test]
    fn mixed_chain_is_left_associative_with_warning() {
        let st = parse_statement("a^b|c").unwrap();
        assert_eq!(
            st.expr,
            Expr::binary(BinOp::Contract, Expr::binary(BinOp::Outer, ident("a"), ident("b")), ident("c"))
        );
        assert_eq!(st.warnings.len(), 1);
        assert!(st.warnings[0].contains("((a ^ b) | c)"), "{}", st.warnings[0]);
        assert!(parse_statement("a*b*c/2").unwrap().warnings.is_empty());
        assert!(parse_statement("a^b + c|d").unwrap().warnings.is_empty());
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_expr("a + b*c").unwrap().to_string(), "(a + (b * c))");
        assert_eq!(parse_expr("-a*b").unwrap().to_string(), "(-a * b)");
        assert_eq!(parse_expr("a - b - c").unwrap().to_string(), "((a - b) - c)");
        assert_eq!(parse_expr("(a + b)^c").unwrap().to_string(), "((a + b) ^ c)");
    }

    #[test]
    fn calls() {
        assert_eq!(parse_expr("dual(P)").unwrap(), Expr::Call("dual".into(), vec![ident("P")]));
        assert_eq!(parse_expr("I5").unwrap(), ident("I5"));
        assert_eq!(
            parse_expr("subst(A, x=1/2)").unwrap(),
            Expr::Call("subst".into(), vec![ident("A"), Expr::Assign("x".into(), Box::new(Expr::Number("1/2".into())))])
        );
        assert_eq!(parse_expr("f()").unwrap(), Expr::Call("f".into(), vec![]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_statement("a + * b").unwrap_err(),
            ParseError::Syntax("unexpected `*`".into(), Pos { line: 1, col: 5 })
        );
        assert!(matches!(parse_statement("(a + b"), Err(ParseError::UnexpectedEnd(_))));
        assert!(matches!(parse_statement("a b"), Err(ParseError::Syntax(_, Pos { line: 1, col: 3 }))));
        assert!(matches!(parse_statement("2 = a"), Err(ParseError::Syntax(..))));
        assert!(matches!(parse_statement_at("a +", 4), Err(ParseError::UnexpectedEnd(_))));
    }
}
