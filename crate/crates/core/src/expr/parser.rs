//! Recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary ('^' '-'? int)?
//! primary := int | int '/' posint | 'eps' | 'H' | 'st' '(' expr ')' | '(' expr ')'
//! ```

use num_traits::{ToPrimitive, Zero};

use super::lexer::{tokenize, Token, TokenKind};
use super::{Expr, ExprKind, ParseError, Span};

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(input);
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    let next = parser.peek();
    if next.kind != TokenKind::Eof {
        return Err(next.error(format!("unexpected {}", next.kind.describe())));
    }
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if !matches!(t.kind, TokenKind::Eof | TokenKind::Invalid(_)) {
            self.pos += 1;
        }
        t
    }

    /// End offset of the most recently consumed token.
    fn last_end(&self) -> usize {
        let t = &self.tokens[self.pos.saturating_sub(1)];
        t.offset + t.len
    }

    fn node(&self, kind: ExprKind, start: usize) -> Expr {
        Expr { kind, span: Span { offset: start, len: self.last_end() - start } }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().offset;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Plus => ExprKind::Add,
                TokenKind::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = self.node(op(Box::new(lhs), Box::new(rhs)), start);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().offset;
        let mut lhs = self.factor()?;
        while self.peek().kind == TokenKind::Star {
            self.bump();
            let rhs = self.factor()?;
            lhs = self.node(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), start);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek().offset;
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            let inner = self.factor()?;
            return Ok(self.node(ExprKind::Neg(Box::new(inner)), start));
        }
        let base = self.primary()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek().kind == TokenKind::Minus {
            self.bump();
            true
        } else {
            false
        };
        let tok = self.bump();
        let TokenKind::Int(n) = tok.kind.clone() else {
            return Err(tok.error("expected integer exponent"));
        };
        let magnitude = n
            .to_i64()
            .ok_or_else(|| ParseError::new("exponent too large", tok.offset))?;
        let exponent = if negative { -magnitude } else { magnitude };
        Ok(self.node(ExprKind::Pow(Box::new(base), exponent), start))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let tok = self.bump();
        let start = tok.offset;
        let kind = match tok.kind.clone() {
            TokenKind::Int(n) => {
                if self.peek().kind == TokenKind::Slash {
                    self.bump();
                    let den = self.bump();
                    match den.kind.clone() {
                        TokenKind::Int(d) if !d.is_zero() => ExprKind::Rat(n, d),
                        TokenKind::Int(_) => return Err(den.error("denominator must be positive")),
                        _ => return Err(den.error("malformed rational: expected denominator")),
                    }
                } else {
                    ExprKind::Int(n)
                }
            }
            TokenKind::Eps => ExprKind::Eps,
            TokenKind::Gen => ExprKind::Gen,
            TokenKind::St => {
                self.expect_lparen()?;
                let inner = self.expr()?;
                self.expect_rparen()?;
                ExprKind::St(Box::new(inner))
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                ExprKind::Paren(Box::new(inner))
            }
            TokenKind::Eof => return Err(tok.error("expected expression")),
            other => return Err(tok.error(format!("expected expression, found {}", other.describe()))),
        };
        Ok(self.node(kind, start))
    }

    fn expect_lparen(&mut self) -> Result<(), ParseError> {
        let tok = self.peek();
        if tok.kind != TokenKind::LParen {
            return Err(tok.error("expected '('"));
        }
        self.bump();
        Ok(())
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        let tok = self.peek();
        if tok.kind != TokenKind::RParen {
            return Err(tok.error("expected ')'"));
        }
        self.bump();
        Ok(())
    }
}
