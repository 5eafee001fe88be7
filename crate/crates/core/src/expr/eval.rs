use num_bigint::BigInt;
use thiserror::Error;

use super::{Expr, ExprKind};
use crate::hyperreal::{Base, HyperError, Hyperreal, Rational};

/// Result of evaluation: `st(..)` nodes yield reals, everything else a hyperreal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Hyper(Hyperreal),
    Real(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error("negative power of a non-monomial at column {}", .offset + 1)]
    NegativePower { offset: usize },
}

pub fn eval(ast: &Expr, base: Base) -> Result<Value, EvalError> {
    match &ast.kind {
        ExprKind::St(inner) => {
            let x = eval_hyper(inner, base)?;
            Ok(Value::Real(x.st()?))
        }
        ExprKind::Paren(inner) => eval(inner, base),
        _ => eval_hyper(ast, base).map(Value::Hyper),
    }
}

fn eval_hyper(ast: &Expr, base: Base) -> Result<Hyperreal, EvalError> {
    let x = match &ast.kind {
        ExprKind::Int(n) => Hyperreal::from_integer(base, BigInt::from(n.clone())),
        ExprKind::Rat(n, d) => Hyperreal::from_rational(
            base,
            Rational::new(BigInt::from(n.clone()), BigInt::from(d.clone())),
        ),
        ExprKind::Eps => Hyperreal::epsilon(base),
        ExprKind::Gen => Hyperreal::generator(base),
        ExprKind::Neg(e) => eval_hyper(e, base)?.neg(),
        ExprKind::Add(l, r) => eval_hyper(l, base)?.add(&eval_hyper(r, base)?)?,
        ExprKind::Sub(l, r) => eval_hyper(l, base)?.sub(&eval_hyper(r, base)?)?,
        ExprKind::Mul(l, r) => eval_hyper(l, base)?.mul(&eval_hyper(r, base)?)?,
        ExprKind::Pow(b, k) => {
            let x = eval_hyper(b, base)?;
            if *k < 0 && !x.is_zero() && x.as_monomial().is_none() {
                return Err(EvalError::NegativePower { offset: b.span.offset });
            }
            x.powi(*k)?
        }
        ExprKind::St(e) => Hyperreal::from_rational(base, eval_hyper(e, base)?.st()?),
        ExprKind::Paren(e) => eval_hyper(e, base)?,
    };
    Ok(x)
}
