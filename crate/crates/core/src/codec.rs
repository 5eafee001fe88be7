//! Injective numbering of words over a fixed alphabet.
//!
//! Words are read as numerals in bijective base `A` (digit values `1..=A`, no
//! zero digit), so the map is a bijection between all finite strings and the
//! naturals: the empty word is `0`, and codes follow shortlex word order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub const DEFAULT_ALPHABET: &str = "abcdefghijklmnopqrstuvwxyz ";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol not in alphabet at position {position}")]
    SymbolNotInAlphabet { symbol: char, position: usize },
    #[error("invalid code {0:?}")]
    InvalidCode(String),
}

/// Ordered set of distinct symbols. The order defines the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    values: HashMap<char, u32>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self, CodecError> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() {
            return Err(CodecError::EmptyAlphabet);
        }
        let mut values = HashMap::with_capacity(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            if values.insert(s, i as u32 + 1).is_some() {
                return Err(CodecError::DuplicateSymbol(s));
            }
        }
        Ok(Alphabet { symbols, values })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Digit value `1..=A` of a symbol.
    pub fn value_of(&self, symbol: char) -> Option<u32> {
        self.values.get(&symbol).copied()
    }

    pub fn as_string(&self) -> String {
        self.symbols.iter().collect()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::new(DEFAULT_ALPHABET).expect("default alphabet is valid")
    }
}

/// Natural-number code of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfoCode(pub BigUint);

impl InfoCode {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for InfoCode {
    fn from(value: BigUint) -> Self {
        InfoCode(value)
    }
}

impl fmt::Display for InfoCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for InfoCode {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CodecError::InvalidCode(s.to_string()));
        }
        s.parse().map(InfoCode).map_err(|_| CodecError::InvalidCode(s.to_string()))
    }
}

pub fn encode(word: &str, alphabet: &Alphabet) -> Result<InfoCode, CodecError> {
    let radix = BigUint::from(alphabet.len());
    let mut code = BigUint::zero();
    for (position, symbol) in word.chars().enumerate() {
        let value = alphabet
            .value_of(symbol)
            .ok_or(CodecError::SymbolNotInAlphabet { symbol, position })?;
        code = code * &radix + value;
    }
    Ok(InfoCode(code))
}

pub fn decode(code: &InfoCode, alphabet: &Alphabet) -> String {
    let radix = BigUint::from(alphabet.len());
    let mut n = code.0.clone();
    let mut reversed = Vec::new();
    while !n.is_zero() {
        // digit in 1..=A
        let digit = (&n - 1u32).mod_floor(&radix) + BigUint::one();
        n = (n - &digit) / &radix;
        let index = digit.to_usize().expect("digit below alphabet size") - 1;
        reversed.push(alphabet.symbols[index]);
    }
    reversed.iter().rev().collect()
}
