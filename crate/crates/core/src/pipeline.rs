//! End-to-end runs and their JSON ledgers.
//!
//! A run encodes a word to its code `c`, picks `λ = c·B^ω`, bundles one
//! ultrasubparticle along the configured coordinate, realizes the result and
//! decodes the realized value back to a word. The [`Ledger`] records every
//! stage; [`recover`] recomputes realization and decoding from the stored
//! intermediate coordinates instead of trusting the stored answer.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{self, Alphabet, CodecError, InfoCode, DEFAULT_ALPHABET};
use crate::engine::{self, EngineError, IntermediateSubparticle, Sign, Ultrasubparticle};
use crate::hyperreal::{lambda_for_code, Base, Hyperreal, Rational, Triple};

pub const LEDGER_VERSION: &str = "1";
pub const DEFAULT_DIMS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("base must be at least 2, got {0}")]
    Base(u64),
    #[error("dims must be at least 3, got {0}")]
    Dims(usize),
    #[error("invalid alphabet: {0}")]
    Alphabet(CodecError),
    #[error("signs must be {expected} characters of '+' or '-', got {found:?}")]
    Signs { expected: usize, found: String },
    #[error("bundle coordinate {index} outside 3..={dims}")]
    Coordinate { index: usize, dims: usize },
    #[error("cannot read config: {0}")]
    Load(String),
}

/// Resolved run configuration; every field is present and validated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub base: u64,
    pub dims: usize,
    pub alphabet: String,
    pub bundle_coordinate: usize,
    /// Quality-coordinate signs for coordinates 3..=dims, as `+`/`-`.
    pub signs: String,
    /// Naming coordinate `k`; carried but never interpreted.
    pub naming: u64,
}

/// Partial configuration from a file or flags. Later layers win.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    pub base: Option<u64>,
    pub dims: Option<usize>,
    pub alphabet: Option<String>,
    pub bundle_coordinate: Option<usize>,
    pub signs: Option<String>,
    pub naming: Option<u64>,
}

impl ConfigOverrides {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Load(e.to_string()))
    }

    /// `other` takes precedence field by field.
    pub fn merge(self, other: ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            base: other.base.or(self.base),
            dims: other.dims.or(self.dims),
            alphabet: other.alphabet.or(self.alphabet),
            bundle_coordinate: other.bundle_coordinate.or(self.bundle_coordinate),
            signs: other.signs.or(self.signs),
            naming: other.naming.or(self.naming),
        }
    }

    /// Fills defaults: base 10, 8 dims, `a..z` plus space, alternating signs,
    /// and the first positive-sign quality coordinate (3 if none).
    pub fn resolve(self) -> Result<Config, ConfigError> {
        let dims = self.dims.unwrap_or(DEFAULT_DIMS);
        if dims < 3 {
            return Err(ConfigError::Dims(dims));
        }
        let signs = self
            .signs
            .unwrap_or_else(|| Sign::format_all(&Sign::alternating(dims - 2)));
        let bundle_coordinate = self.bundle_coordinate.unwrap_or_else(|| {
            signs.chars().position(|c| c == '+').map_or(3, |i| i + 3)
        });
        let config = Config {
            base: self.base.unwrap_or(10),
            dims,
            alphabet: self.alphabet.unwrap_or_else(|| DEFAULT_ALPHABET.to_string()),
            bundle_coordinate,
            signs,
            naming: self.naming.unwrap_or(1),
        };
        config.validate()?;
        Ok(config)
    }
}

impl Default for Config {
    fn default() -> Self {
        ConfigOverrides::default().resolve().expect("defaults are valid")
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        Base::new(self.base).map_err(|_| ConfigError::Base(self.base))?;
        if self.dims < 3 {
            return Err(ConfigError::Dims(self.dims));
        }
        Alphabet::new(&self.alphabet).map_err(ConfigError::Alphabet)?;
        let signs = Sign::parse_all(&self.signs);
        if signs.is_none_or(|s| s.len() != self.dims - 2) {
            return Err(ConfigError::Signs { expected: self.dims - 2, found: self.signs.clone() });
        }
        if !(3..=self.dims).contains(&self.bundle_coordinate) {
            return Err(ConfigError::Coordinate { index: self.bundle_coordinate, dims: self.dims });
        }
        Ok(())
    }

    pub fn base(&self) -> Base {
        Base::new(self.base).expect("validated base")
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(&self.alphabet).expect("validated alphabet")
    }

    pub fn sign_vector(&self) -> Vec<Sign> {
        Sign::parse_all(&self.signs).expect("validated signs")
    }

    pub fn bundle_sign(&self) -> Sign {
        self.sign_vector()[self.bundle_coordinate - 3]
    }

    pub fn ultrasubparticle(&self) -> Ultrasubparticle {
        Ultrasubparticle::new(self.base(), BigUint::from(self.naming), self.sign_vector())
            .expect("validated dims")
    }
}

/// Record of one encode, bundle, realize, decode run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ledger {
    pub version: String,
    pub config: Config,
    pub word: String,
    pub code: String,
    /// Head `f(0)` of the partial sequence attached to the word; equals `code`.
    pub sequence_head: String,
    pub lambda: Vec<Triple>,
    /// True for the empty word, whose `λ = 0` is not infinite.
    pub lambda_degenerate: bool,
    pub ultrasubparticle: Vec<Vec<Triple>>,
    pub intermediate: Vec<Vec<Triple>>,
    pub realized: Vec<String>,
    pub decoded: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("realized coordinate {0} is not a natural number")]
    NotACode(String),
}

/// Failure to recompute a ledger.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecoverError {
    #[error("malformed ledger: {0}")]
    Malformed(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("standard part undefined: infinite value at coordinate {0}")]
    Infinite(usize),
}

fn serialize_coords(coords: &[Hyperreal]) -> Vec<Vec<Triple>> {
    coords.iter().map(Hyperreal::to_triples).collect()
}

/// Turns the realized bundled coordinate back into a code, undoing the sign
/// of the coordinate it was carried on.
fn code_from_realized(value: &Rational, sign: Sign) -> Option<InfoCode> {
    engine::realized_natural(&sign.apply_rational(value)).map(InfoCode)
}

pub fn run(word: &str, config: &Config) -> Result<Ledger, PipelineError> {
    config.validate()?;
    let alphabet = config.alphabet();
    let base = config.base();
    let code = codec::encode(word, &alphabet)?;
    let witness = lambda_for_code(code.value(), base);
    let particle = config.ultrasubparticle();
    let intermediate = engine::bundle(&particle, config.bundle_coordinate, &witness.lambda)?;
    let realized = engine::realize(&intermediate)?;
    let carried = realized.get(config.bundle_coordinate).expect("index validated");
    let recovered = code_from_realized(carried, config.bundle_sign())
        .ok_or_else(|| PipelineError::NotACode(carried.to_string()))?;
    let decoded = codec::decode(&recovered, &alphabet);

    Ok(Ledger {
        version: LEDGER_VERSION.to_string(),
        config: config.clone(),
        word: word.to_string(),
        code: code.to_string(),
        sequence_head: code.to_string(),
        lambda: witness.lambda.value().to_triples(),
        lambda_degenerate: witness.degenerate,
        ultrasubparticle: serialize_coords(&particle.coords()),
        intermediate: serialize_coords(intermediate.coords()),
        realized: realized.coords().iter().map(ToString::to_string).collect(),
        decoded,
    })
}

impl Ledger {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ledger serializes")
    }

    pub fn from_json(text: &str) -> Result<Ledger, RecoverError> {
        serde_json::from_str(text).map_err(|e| RecoverError::Malformed(e.to_string()))
    }
}

/// Recomputes realization and decoding from `ledger.intermediate`.
///
/// Structural problems (bad version, config, or coordinate encoding) are
/// [`RecoverError::Malformed`]; well-formed ledgers whose recomputed values
/// disagree with what they claim are [`RecoverError::Integrity`].
pub fn recover(ledger: &Ledger) -> Result<String, RecoverError> {
    let malformed = |m: String| RecoverError::Malformed(m);
    let integrity = |m: String| RecoverError::Integrity(m);

    if ledger.version != LEDGER_VERSION {
        return Err(malformed(format!("unsupported version {:?}", ledger.version)));
    }
    let config = &ledger.config;
    config.validate().map_err(|e| malformed(e.to_string()))?;
    let base = config.base();
    if ledger.intermediate.len() != config.dims {
        return Err(malformed(format!(
            "intermediate has {} coordinates, config says {}",
            ledger.intermediate.len(),
            config.dims
        )));
    }
    let coords = ledger
        .intermediate
        .iter()
        .enumerate()
        .map(|(i, t)| {
            Hyperreal::from_triples(base, t).map_err(|e| malformed(format!("coordinate {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let code: InfoCode = ledger.code.parse().map_err(|e: CodecError| malformed(e.to_string()))?;

    let particle = IntermediateSubparticle::new(coords).map_err(|e| malformed(e.to_string()))?;
    let realized = match engine::realize(&particle) {
        Ok(r) => r,
        Err(EngineError::InfiniteCoordinate(i)) => return Err(RecoverError::Infinite(i)),
        Err(e) => return Err(malformed(e.to_string())),
    };
    particle.check_shape().map_err(|e| integrity(e.to_string()))?;

    let carried = realized.get(config.bundle_coordinate).expect("index validated");
    let recovered = code_from_realized(carried, config.bundle_sign())
        .ok_or_else(|| integrity(format!("realized value {carried} is not a code")))?;
    let word = codec::decode(&recovered, &config.alphabet());

    if ledger.sequence_head != ledger.code {
        return Err(integrity("sequence head differs from code".into()));
    }
    if recovered != code {
        return Err(integrity(format!("recomputed code {recovered} differs from stored {code}")));
    }
    if word != ledger.decoded {
        return Err(integrity(format!(
            "recomputed word {word:?} differs from stored {:?}",
            ledger.decoded
        )));
    }
    Ok(word)
}

/// Outcome of a full run plus recovery for one word.
pub fn roundtrip_word(word: &str, config: &Config) -> Result<(), String> {
    let ledger = run(word, config).map_err(|e| e.to_string())?;
    let reparsed = Ledger::from_json(&ledger.to_json()).map_err(|e| e.to_string())?;
    if reparsed != ledger {
        return Err("ledger changed across serialization".into());
    }
    let recovered = recover(&reparsed).map_err(|e| e.to_string())?;
    if recovered != word {
        return Err(format!("recovered {recovered:?}"));
    }
    Ok(())
}
