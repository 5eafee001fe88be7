//! Exact model of infinitesimal coordinate encoding.
//!
//! Words are numbered by [`codec`], the number is carried as `λ·ε` inside a
//! coordinate of a [`engine::Ultrasubparticle`] through hyperfinite bundling,
//! and recovered by taking standard parts ([`engine::realize`]) and decoding.
//! All arithmetic is exact, over the Laurent hyperreals of [`hyperreal`].

pub mod codec;
pub mod engine;
pub mod expr;
pub mod hyperreal;
pub mod pipeline;

pub use codec::{decode, encode, Alphabet, CodecError, InfoCode};
pub use hyperreal::{
    hyperfinite_constant_sum, lambda_for_code, Base, Class, HyperError, Hypernatural, Hyperreal,
    LambdaWitness, Rational,
};
pub use engine::{
    bundle, realize, EngineError, IntermediateSubparticle, QualitySpec, RealizedVector, Sign,
    Ultrasubparticle,
};
