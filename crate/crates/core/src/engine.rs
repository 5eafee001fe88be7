//! Coordinate vectors, translations, bundling and realization.
//!
//! Coordinates are 1-based throughout, matching the usual `(a_1, …, a_n)`
//! notation: `a_1` is the naming coordinate `k`, `a_2` the count, and
//! `a_3..=a_n` the quality coordinates. An ultrasubparticle carries `±ε` in
//! every quality coordinate.
//!
//! Translations are affine maps `x ↦ I·x + b`. Iterating one `m` times is
//! evaluated in closed form as `x + m·b`, which is what makes an infinite
//! count like `λ - 1` usable.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::hyperreal::{
    hyperfinite_constant_sum, Base, Class, HyperError, Hypernatural, Hyperreal, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error("coordinate index {index} out of range 3..={dims}")]
    IndexOutOfRange { index: usize, dims: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("infinite value at coordinate {0}")]
    InfiniteCoordinate(usize),
    #[error("duplicate coordinate {0} in quality spec")]
    DuplicateCoordinate(usize),
    #[error("at least 3 dimensions required, got {0}")]
    TooFewDimensions(usize),
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("coordinate {index} is neither ±ε nor a multiple of the count times ε")]
    UnexpectedCoordinate { index: usize },
}

pub type Result<T, E = EngineError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn apply(self, x: &Hyperreal) -> Hyperreal {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => x.neg(),
        }
    }

    pub fn apply_rational(self, r: &Rational) -> Rational {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => -r.clone(),
        }
    }

    /// `+, -, +, …` of the given length.
    pub fn alternating(len: usize) -> Vec<Sign> {
        (0..len).map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus }).collect()
    }

    pub fn parse_all(s: &str) -> Option<Vec<Sign>> {
        s.chars().map(Sign::from_char).collect()
    }

    pub fn format_all(signs: &[Sign]) -> String {
        signs.iter().map(|s| s.symbol()).collect()
    }
}

fn check_quality_index(index: usize, dims: usize) -> Result<()> {
    if index < 3 || index > dims {
        return Err(EngineError::IndexOutOfRange { index, dims });
    }
    Ok(())
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(EngineError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Primitive coordinate vector `(k, 1, σ_3·ε, …, σ_n·ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ultrasubparticle {
    base: Base,
    naming: BigUint,
    signs: Vec<Sign>,
}

impl Ultrasubparticle {
    /// `signs[0]` is the sign of coordinate 3.
    pub fn new(base: Base, naming: BigUint, signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(EngineError::TooFewDimensions(signs.len() + 2));
        }
        Ok(Ultrasubparticle { base, naming, signs })
    }

    pub fn alternating(base: Base, dims: usize, naming: BigUint) -> Result<Self> {
        if dims < 3 {
            return Err(EngineError::TooFewDimensions(dims));
        }
        Self::new(base, naming, Sign::alternating(dims - 2))
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn dims(&self) -> usize {
        self.signs.len() + 2
    }

    pub fn naming(&self) -> &BigUint {
        &self.naming
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn count(&self) -> Hypernatural {
        Hypernatural::one(self.base)
    }

    /// Sign of quality coordinate `index` (3..=n).
    pub fn sign(&self, index: usize) -> Result<Sign> {
        check_quality_index(index, self.dims())?;
        Ok(self.signs[index - 3])
    }

    pub fn coords(&self) -> Vec<Hyperreal> {
        let eps = Hyperreal::epsilon(self.base);
        let mut out = Vec::with_capacity(self.dims());
        out.push(Hyperreal::from_integer(self.base, BigInt::from(self.naming.clone())));
        out.push(Hyperreal::one(self.base));
        out.extend(self.signs.iter().map(|s| s.apply(&eps)));
        out
    }
}

/// Result of a hyperfinite combination: `a_2` holds the count `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateSubparticle {
    base: Base,
    coords: Vec<Hyperreal>,
}

impl IntermediateSubparticle {
    /// Checks dimension, bases, and that `a_2` is a hypernatural.
    pub fn new(coords: Vec<Hyperreal>) -> Result<Self> {
        if coords.len() < 3 {
            return Err(EngineError::TooFewDimensions(coords.len()));
        }
        let base = coords[0].base();
        for c in &coords {
            if c.base() != base {
                return Err(HyperError::BaseMismatch { left: base.get(), right: c.base().get() }.into());
            }
        }
        Hypernatural::new(coords[1].clone())?;
        Ok(IntermediateSubparticle { base, coords })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn dims(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Hyperreal] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Hyperreal> {
        self.coords
    }

    pub fn count(&self) -> Hypernatural {
        Hypernatural::new(self.coords[1].clone()).expect("validated on construction")
    }

    /// Checks that every quality coordinate is `±ε` or `±λ·ε`.
    pub fn check_shape(&self) -> Result<()> {
        let eps = Hyperreal::epsilon(self.base);
        let bundled = self.coords[1].mul(&eps)?;
        for (i, a) in self.coords.iter().enumerate().skip(2) {
            let ok = [&eps, &bundled].iter().any(|v| *a == **v || *a == v.neg());
            if !ok {
                return Err(EngineError::UnexpectedCoordinate { index: i + 1 });
            }
        }
        Ok(())
    }
}

/// Translation `x ↦ x + b` (the linear part is the identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    translation: Vec<Hyperreal>,
}

impl AffineMap {
    pub fn translation(&self) -> &[Hyperreal] {
        &self.translation
    }

    pub fn dims(&self) -> usize {
        self.translation.len()
    }

    /// One application.
    pub fn apply(&self, x: &[Hyperreal]) -> Result<Vec<Hyperreal>> {
        check_dims(self.dims(), x.len())?;
        x.iter().zip(&self.translation).map(|(a, b)| Ok(a.add(b)?)).collect()
    }
}

/// Translation with `b_2 = 1`, `b_j = a_j = σ_j·ε`, all else 0.
pub fn make_translation(u: &Ultrasubparticle, index: usize) -> Result<AffineMap> {
    let sign = u.sign(index)?;
    let base = u.base();
    let mut translation = vec![Hyperreal::zero(base); u.dims()];
    translation[1] = Hyperreal::one(base);
    translation[index - 1] = sign.apply(&Hyperreal::epsilon(base));
    Ok(AffineMap { translation })
}

/// `m`-fold application of `map`, as the closed form `x + m·b`.
pub fn apply_translation_times(
    map: &AffineMap,
    x: &[Hyperreal],
    times: &Hypernatural,
) -> Result<Vec<Hyperreal>> {
    check_dims(map.dims(), x.len())?;
    let m = times.value();
    x.iter()
        .zip(&map.translation)
        .map(|(a, b)| Ok(a.add(&m.mul(b)?)?))
        .collect()
}

/// Translation vector with `b_2 = λ - 1` and `b_j = (λ - 1)·σ_j·ε`; `λ = 0`
/// is allowed here and gives `b_2 = -1`.
fn lambda_translation(u: &Ultrasubparticle, index: usize, lambda: &Hypernatural) -> Result<AffineMap> {
    let sign = u.sign(index)?;
    let base = u.base();
    let steps = lambda.value().sub(&Hyperreal::one(base))?;
    let mut translation = vec![Hyperreal::zero(base); u.dims()];
    translation[index - 1] = sign.apply(&steps.mul(&Hyperreal::epsilon(base))?);
    translation[1] = steps;
    Ok(AffineMap { translation })
}

/// One-shot translation equivalent to `λ - 1` applications of [`make_translation`].
pub fn make_lambda_translation(
    u: &Ultrasubparticle,
    index: usize,
    lambda: &Hypernatural,
) -> Result<AffineMap> {
    if lambda.is_zero() {
        return Err(EngineError::ZeroCount);
    }
    lambda_translation(u, index, lambda)
}

/// Combines `λ` copies of `u` along quality coordinate `index`.
///
/// The result has `a_2 = λ` and `a_index = λ·σ·ε`. `λ = 0` is the degenerate
/// empty combination: both coordinates become 0.
pub fn bundle(
    u: &Ultrasubparticle,
    index: usize,
    lambda: &Hypernatural,
) -> Result<IntermediateSubparticle> {
    let map = lambda_translation(u, index, lambda)?;
    let coords = map.apply(&u.coords())?;
    let sign = u.sign(index)?;
    let expected = hyperfinite_constant_sum(lambda, &sign.apply(&Hyperreal::epsilon(u.base())))?;
    assert_eq!(coords[index - 1], expected, "bundled coordinate disagrees with constant sum");
    assert_eq!(&coords[1], lambda.value());
    IntermediateSubparticle::new(coords)
}

/// Standard real coordinates. Naming and count are always 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealizedVector(Vec<Rational>);

impl RealizedVector {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dims(&self) -> usize {
        self.0.len()
    }

    /// 1-based access.
    pub fn get(&self, index: usize) -> Option<&Rational> {
        index.checked_sub(1).and_then(|i| self.0.get(i))
    }
}

impl fmt::Display for RealizedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Diagonal operator matrix with zero on the naming and count entries and
/// the standard part on every quality entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealizationMap {
    dims: usize,
}

impl RealizationMap {
    pub fn new(dims: usize) -> Result<Self> {
        if dims < 3 {
            return Err(EngineError::TooFewDimensions(dims));
        }
        Ok(RealizationMap { dims })
    }

    pub fn apply(&self, coords: &[Hyperreal]) -> Result<RealizedVector> {
        check_dims(self.dims, coords.len())?;
        let mut out = vec![Rational::zero(), Rational::zero()];
        for (i, a) in coords.iter().enumerate().skip(2) {
            if a.classify() == Class::Infinite {
                return Err(EngineError::InfiniteCoordinate(i + 1));
            }
            out.push(a.st()?);
        }
        Ok(RealizedVector(out))
    }
}

pub fn realize(s: &IntermediateSubparticle) -> Result<RealizedVector> {
    RealizationMap::new(s.dims())?.apply(s.coords())
}

/// Diagonal bundling multipliers for several qualities at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualitySpec {
    pub entries: Vec<(usize, Hypernatural)>,
    /// Multiplier for quality coordinates not listed; `None` means 0.
    pub tail_scale: Option<BigUint>,
}

impl QualitySpec {
    pub fn new(entries: Vec<(usize, Hypernatural)>, tail_scale: Option<BigUint>) -> Self {
        QualitySpec { entries, tail_scale }
    }

    pub fn validate(&self, dims: usize) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (index, _) in &self.entries {
            check_quality_index(*index, dims)?;
            if !seen.insert(*index) {
                return Err(EngineError::DuplicateCoordinate(*index));
            }
        }
        Ok(())
    }

    /// Diagonal entries `b_11..b_nn`.
    pub fn diagonal(&self, dims: usize, base: Base) -> Result<Vec<Hyperreal>> {
        self.validate(dims)?;
        let tail = match &self.tail_scale {
            Some(q) => Hyperreal::from_integer(base, BigInt::from(q.clone())),
            None => Hyperreal::zero(base),
        };
        let mut diag = vec![Hyperreal::zero(base), Hyperreal::zero(base)];
        diag.extend(std::iter::repeat_n(tail, dims - 2));
        for (index, lambda) in &self.entries {
            diag[index - 1] = lambda.value().clone();
        }
        Ok(diag)
    }
}

/// Applies the diagonal map of `spec` to `u`, then realizes.
pub fn quality_bundle(u: &Ultrasubparticle, spec: &QualitySpec) -> Result<RealizedVector> {
    let diag = spec.diagonal(u.dims(), u.base())?;
    let scaled = u
        .coords()
        .iter()
        .zip(&diag)
        .map(|(a, b)| Ok(b.mul(a)?))
        .collect::<Result<Vec<_>>>()?;
    RealizationMap::new(u.dims())?.apply(&scaled)
}

/// Whether a realized value is a natural number; returns it if so.
pub fn realized_natural(r: &Rational) -> Option<BigUint> {
    if !r.is_integer() || r < &Rational::zero() {
        return None;
    }
    r.to_integer().to_biguint()
}
