//! Exact arithmetic in the computable hyperreal fragment.
//!
//! A [`Hyperreal`] is a finite Laurent combination `Σ c_k · g^k` with exact
//! rational coefficients, where `g = B^ω` for a fixed base `B ≥ 2` and a fixed
//! infinite natural `ω`. The exponent `-1` term is a multiple of the
//! infinitesimal `ε = 1/B^ω`. `ω` itself never appears as a value; only its
//! powers of `B` do, so nothing implemented here depends on which infinite `ω`
//! is meant.
//!
//! The set of such combinations is a subring of the hyperreal field. It is
//! closed under addition, subtraction and multiplication, and division by a
//! monomial `c · g^k` is supported through [`Hyperreal::monomial_div`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Serialized hyperreal term: `[exponent, numerator, denominator]`.
pub type Triple = (i64, String, String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("invalid base {0}: must be at least 2")]
    InvalidBase(u64),
    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivideByZero,
    #[error("standard part undefined: infinite value")]
    InfiniteValue,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("not a hypernatural: {0}")]
    NotHypernatural(String),
    #[error("malformed hyperreal: {0}")]
    Malformed(String),
}

pub type Result<T, E = HyperError> = std::result::Result<T, E>;

/// Numeration base `B` of the generator `g = B^ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Base(u64);

impl Base {
    pub const BINARY: Base = Base(2);
    pub const DECIMAL: Base = Base(10);

    pub fn new(base: u64) -> Result<Self> {
        if base < 2 {
            return Err(HyperError::InvalidBase(base));
        }
        Ok(Base(base))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Base {
    type Error = HyperError;

    fn try_from(value: u64) -> Result<Self> {
        Base::new(value)
    }
}

impl From<Base> for u64 {
    fn from(base: Base) -> u64 {
        base.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Coarse magnitude class of a hyperreal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    /// Member of the monad of 0 (includes 0 itself).
    Infinitesimal,
    /// Finite with a nonzero standard part.
    FiniteAppreciable,
    Infinite,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Class::Infinitesimal => "Infinitesimal",
            Class::FiniteAppreciable => "FiniteAppreciable",
            Class::Infinite => "Infinite",
        };
        f.write_str(s)
    }
}

/// Finite Laurent combination `Σ c_k · (B^ω)^k` with rational coefficients.
///
/// Canonical form: no stored coefficient is zero. Equality is therefore
/// structural equality of the term maps (plus the base).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperreal {
    base: Base,
    terms: BTreeMap<i64, Rational>,
}

impl Hyperreal {
    pub fn zero(base: Base) -> Self {
        Hyperreal { base, terms: BTreeMap::new() }
    }

    pub fn one(base: Base) -> Self {
        Self::from_rational(base, Rational::one())
    }

    pub fn from_rational(base: Base, value: Rational) -> Self {
        Self::monomial(base, value, 0)
    }

    pub fn from_integer(base: Base, value: impl Into<BigInt>) -> Self {
        Self::from_rational(base, Rational::from_integer(value.into()))
    }

    /// `ε = 1/B^ω`.
    pub fn epsilon(base: Base) -> Self {
        Self::monomial(base, Rational::one(), -1)
    }

    /// `g = B^ω`.
    pub fn generator(base: Base) -> Self {
        Self::monomial(base, Rational::one(), 1)
    }

    /// `coeff · g^exponent`.
    pub fn monomial(base: Base, coeff: Rational, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Hyperreal { base, terms }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(base: Base, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        Hyperreal { base, terms: map }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `g^exponent` (zero when absent).
    pub fn coefficient(&self, exponent: i64) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().rev().map(|(k, c)| (*k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn leading_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single term when `self` is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// Sign in the ordered field: decided by the leading coefficient, since
    /// `g` dominates every real and every lower power of `g`.
    pub fn signum(&self) -> Ordering {
        match self.terms.values().next_back() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    fn check_base(&self, other: &Hyperreal) -> Result<()> {
        if self.base != other.base {
            return Err(HyperError::BaseMismatch { left: self.base.get(), right: other.base.get() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Hyperreal) -> Result<Hyperreal> {
        self.check_base(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, *k, c.clone());
        }
        Ok(Hyperreal { base: self.base, terms })
    }

    pub fn sub(&self, other: &Hyperreal) -> Result<Hyperreal> {
        self.check_base(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, *k, -c.clone());
        }
        Ok(Hyperreal { base: self.base, terms })
    }

    pub fn neg(&self) -> Hyperreal {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        Hyperreal { base: self.base, terms }
    }

    /// Product by convolution of the term maps.
    pub fn mul(&self, other: &Hyperreal) -> Result<Hyperreal> {
        self.check_base(other)?;
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = ka.checked_add(*kb).ok_or(HyperError::ExponentOverflow)?;
                accumulate(&mut terms, k, ca * cb);
            }
        }
        Ok(Hyperreal { base: self.base, terms })
    }

    pub fn pow(&self, exponent: u32) -> Result<Hyperreal> {
        let mut result = Hyperreal::one(self.base);
        let mut square = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(result)
    }

    pub fn scale(&self, factor: &Rational) -> Hyperreal {
        if factor.is_zero() {
            return Hyperreal::zero(self.base);
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c * factor)).collect();
        Hyperreal { base: self.base, terms }
    }

    /// `self · (1/divisor) · g^(-exponent)`.
    pub fn monomial_div(&self, divisor: &Rational, exponent: i64) -> Result<Hyperreal> {
        if divisor.is_zero() {
            return Err(HyperError::DivideByZero);
        }
        let inv = divisor.recip();
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let shifted = k.checked_sub(exponent).ok_or(HyperError::ExponentOverflow)?;
            terms.insert(shifted, c * &inv);
        }
        Ok(Hyperreal { base: self.base, terms })
    }

    /// `self^exponent` for a possibly negative exponent; negative powers need
    /// a nonzero monomial.
    pub fn powi(&self, exponent: i64) -> Result<Hyperreal> {
        if exponent >= 0 {
            let e = u32::try_from(exponent).map_err(|_| HyperError::ExponentOverflow)?;
            return self.pow(e);
        }
        let (k, c) = match self.as_monomial() {
            Some(term) => term,
            None if self.is_zero() => return Err(HyperError::DivideByZero),
            None => {
                return Err(HyperError::Malformed(format!(
                    "negative power of non-monomial {self}"
                )))
            }
        };
        let e = i32::try_from(exponent).map_err(|_| HyperError::ExponentOverflow)?;
        let coeff = c.pow(e);
        let k = k.checked_mul(exponent).ok_or(HyperError::ExponentOverflow)?;
        Ok(Hyperreal::monomial(self.base, coeff, k))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.leading_exponent(), Some(k) if k > 0)
    }

    /// Standard part: the exponent-0 coefficient of a finite value.
    pub fn st(&self) -> Result<Rational> {
        if self.is_infinite() {
            return Err(HyperError::InfiniteValue);
        }
        Ok(self.coefficient(0))
    }

    pub fn classify(&self) -> Class {
        if self.is_infinite() {
            Class::Infinite
        } else if self.terms.contains_key(&0) {
            Class::FiniteAppreciable
        } else {
            Class::Infinitesimal
        }
    }

    /// Whether `self` lies in the monad of the real `r`.
    pub fn in_monad(&self, r: &Rational) -> bool {
        let mut terms = self.terms.clone();
        accumulate(&mut terms, 0, -r.clone());
        Hyperreal { base: self.base, terms }.classify() == Class::Infinitesimal
    }

    /// Descending-exponent `[exponent, numerator, denominator]` triples.
    pub fn to_triples(&self) -> Vec<Triple> {
        self.terms()
            .map(|(k, c)| (k, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    /// Strict inverse of [`Hyperreal::to_triples`]: rejects zero or unreduced
    /// coefficients, nonpositive denominators and out-of-order exponents.
    pub fn from_triples(base: Base, triples: &[Triple]) -> Result<Hyperreal> {
        let mut terms = BTreeMap::new();
        let mut previous: Option<i64> = None;
        for (k, num, den) in triples {
            if let Some(p) = previous {
                if *k >= p {
                    return Err(HyperError::Malformed(format!(
                        "exponents must be strictly descending ({p} then {k})"
                    )));
                }
            }
            previous = Some(*k);
            let numer: BigInt = num
                .parse()
                .map_err(|_| HyperError::Malformed(format!("bad numerator {num:?}")))?;
            let denom: BigInt = den
                .parse()
                .map_err(|_| HyperError::Malformed(format!("bad denominator {den:?}")))?;
            if denom.sign() != Sign::Plus {
                return Err(HyperError::Malformed(format!("nonpositive denominator {den}")));
            }
            if numer.is_zero() {
                return Err(HyperError::Malformed(format!("zero coefficient at exponent {k}")));
            }
            let coeff = Rational::new(numer.clone(), denom.clone());
            if coeff.numer() != &numer || coeff.denom() != &denom {
                return Err(HyperError::Malformed(format!("unreduced coefficient {num}/{den}")));
            }
            terms.insert(*k, coeff);
        }
        Ok(Hyperreal { base, terms })
    }
}

fn accumulate(terms: &mut BTreeMap<i64, Rational>, exponent: i64, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(exponent) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl std::ops::Neg for &Hyperreal {
    type Output = Hyperreal;

    fn neg(self) -> Hyperreal {
        Hyperreal::neg(self)
    }
}

/// Prints in the expression syntax, e.g. `6 + eps - eps^2` or `42*H - 1`.
impl fmt::Display for Hyperreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let atom = match k {
                0 => None,
                1 => Some("H".to_string()),
                -1 => Some("eps".to_string()),
                k if k > 1 => Some(format!("H^{k}")),
                k => Some(format!("eps^{}", k.unsigned_abs())),
            };
            match atom {
                None => write!(f, "{magnitude}")?,
                Some(atom) if magnitude.is_one() => f.write_str(&atom)?,
                Some(atom) => write!(f, "{magnitude}*{atom}")?,
            }
        }
        Ok(())
    }
}

/// Nonnegative hyperinteger: a [`Hyperreal`] with integer coefficients,
/// nonnegative exponents and nonnegative value.
///
/// Zero is admitted so that the empty word's degenerate count can be carried
/// through the same code paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypernatural(Hyperreal);

impl Hypernatural {
    pub fn new(value: Hyperreal) -> Result<Self> {
        for (k, c) in value.terms() {
            if k < 0 || !c.is_integer() {
                return Err(HyperError::NotHypernatural(value.to_string()));
            }
        }
        if value.signum() == Ordering::Less {
            return Err(HyperError::NotHypernatural(value.to_string()));
        }
        Ok(Hypernatural(value))
    }

    pub fn from_natural(base: Base, n: impl Into<BigUint>) -> Self {
        Hypernatural(Hyperreal::from_integer(base, BigInt::from(n.into())))
    }

    pub fn one(base: Base) -> Self {
        Hypernatural(Hyperreal::one(base))
    }

    pub fn value(&self) -> &Hyperreal {
        &self.0
    }

    pub fn into_value(self) -> Hyperreal {
        self.0
    }

    pub fn base(&self) -> Base {
        self.0.base()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Membership in ℕ_∞.
    pub fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    /// The standard natural when finite.
    pub fn to_natural(&self) -> Option<BigUint> {
        if self.is_infinite() {
            return None;
        }
        self.0.coefficient(0).to_integer().to_biguint()
    }

    /// `self - 1`, defined when `self ≥ 1`.
    pub fn predecessor(&self) -> Result<Hypernatural> {
        Hypernatural::new(self.0.sub(&Hyperreal::one(self.base()))?)
    }
}

impl fmt::Display for Hypernatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A count `λ` chosen so that `st(λ/B^ω)` equals a given code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaWitness {
    pub lambda: Hypernatural,
    /// Set for code 0, where `λ = 0` is not an infinite hypernatural.
    pub degenerate: bool,
}

/// Canonical witness `λ = code · B^ω`.
///
/// Any `λ` in the monad of `code · B^ω` (after division by `B^ω`) would
/// serve; this one is fixed so runs are reproducible.
pub fn lambda_for_code(code: &BigUint, base: Base) -> LambdaWitness {
    let coeff = Rational::from_integer(BigInt::from(code.clone()));
    let lambda = Hypernatural(Hyperreal::monomial(base, coeff, 1));
    LambdaWitness { degenerate: code.is_zero(), lambda }
}

/// Closed form of `Σ_{n=1}^{count} term` for a constant term.
pub fn hyperfinite_constant_sum(count: &Hypernatural, term: &Hyperreal) -> Result<Hyperreal> {
    count.value().mul(term)
}
