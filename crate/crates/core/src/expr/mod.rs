//! A small expression language over the hyperreal fragment.
//!
//! `eps` is `1/B^ω`, `H` is `B^ω`, `st(..)` takes a standard part. Integer and
//! `p/q` literals, `+ - *`, unary minus and integer powers are supported.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::hyperreal::{Base, Class, Hyperreal, Rational};

pub use eval::{eval, EvalError, Value};
pub use parser::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    /// Character offset into the source.
    pub offset: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigUint),
    /// `numerator/denominator`, denominator nonzero.
    Rat(BigUint, BigUint),
    Eps,
    Gen,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    St(Box<Expr>),
    Paren(Box<Expr>),
}

/// Syntax tree node. Equality is structural: spans are ignored.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

/// Source form that reparses to a structurally identical tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Rat(n, d) => write!(f, "{n}/{d}"),
            ExprKind::Eps => f.write_str("eps"),
            ExprKind::Gen => f.write_str("H"),
            ExprKind::Neg(e) => write!(f, "-{e}"),
            ExprKind::Add(l, r) => write!(f, "{l} + {r}"),
            ExprKind::Sub(l, r) => write!(f, "{l} - {r}"),
            ExprKind::Mul(l, r) => write!(f, "{l}*{r}"),
            ExprKind::Pow(b, k) => write!(f, "{b}^{k}"),
            ExprKind::St(e) => write!(f, "st({e})"),
            ExprKind::Paren(e) => write!(f, "({e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("error at column {}: {message}", .offset + 1)]
pub struct ParseError {
    pub message: String,
    /// Character offset of the first offending character; the input length at end of input.
    pub offset: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, offset: usize) -> Self {
        ParseError { message: message.into(), offset }
    }

    /// 1-based column.
    pub fn column(&self) -> usize {
        self.offset + 1
    }

    /// Error line followed by the input and a caret under the offending column.
    pub fn render(&self, input: &str) -> String {
        format!("{self}\n  {input}\n  {}^", " ".repeat(self.offset))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Parses and evaluates `text` in base `base`.
pub fn evaluate(text: &str, base: Base) -> Result<Value, ExprError> {
    let ast = parse(text)?;
    Ok(eval(&ast, base)?)
}

/// Human-readable summary: canonical form, class, and standard part when finite.
pub fn describe(value: &Value) -> String {
    match value {
        Value::Real(r) => r.to_string(),
        Value::Hyper(x) => match x.classify() {
            Class::Infinite => format!("{x} (Infinite)"),
            class => format!("{x} ({class}, st={})", x.coefficient(0)),
        },
    }
}

impl Value {
    pub fn into_hyperreal(self, base: Base) -> Hyperreal {
        match self {
            Value::Hyper(x) => x,
            Value::Real(r) => Hyperreal::from_rational(base, r),
        }
    }

    pub fn as_real(&self) -> Option<&Rational> {
        match self {
            Value::Real(r) => Some(r),
            Value::Hyper(_) => None,
        }
    }
}
