//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

pub mod golden;

use num_bigint::BigInt;
use num_traits::Zero;
use subparticle::{Base, Hyperreal, Rational};

pub type TermList = Vec<(i64, Rational)>;

/// Sorts by descending exponent, merges equal exponents, drops zeros.
pub fn normalize(mut terms: TermList) -> TermList {
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    let mut out: TermList = Vec::new();
    for (k, c) in terms {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Naive double-loop product of two term lists.
pub fn convolve(a: &TermList, b: &TermList) -> TermList {
    let mut raw = Vec::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            raw.push((ka + kb, ca * cb));
        }
    }
    normalize(raw)
}

pub fn add_lists(a: &TermList, b: &TermList) -> TermList {
    normalize(a.iter().chain(b.iter()).cloned().collect())
}

pub fn list_of(x: &Hyperreal) -> TermList {
    x.terms().map(|(k, c)| (k, c.clone())).collect()
}

pub fn hyper_of(base: Base, terms: &TermList) -> Hyperreal {
    let mut x = Hyperreal::zero(base);
    for (k, c) in terms {
        x = x.add(&Hyperreal::monomial(base, c.clone(), *k)).unwrap();
    }
    x
}

/// Standard part read straight off a normalized list.
pub fn list_st(terms: &TermList) -> Rational {
    terms
        .iter()
        .find(|(k, _)| *k == 0)
        .map_or_else(Rational::zero, |(_, c)| c.clone())
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// All words of length `0..=max_len` over `alphabet`, in shortlex order.
pub fn shortlex(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let next: Vec<String> = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |c| {
                    let mut v = w.clone();
                    v.push(*c);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Applies `x ↦ x + b` literally `m` times.
pub fn iterate_translation(x: &[Hyperreal], b: &[Hyperreal], m: u64) -> Vec<Hyperreal> {
    let mut cur = x.to_vec();
    for _ in 0..m {
        cur = cur.iter().zip(b).map(|(a, t)| a.add(t).unwrap()).collect();
    }
    cur
}

/// `m`-fold literal sum of `term`.
pub fn repeated_sum(term: &Hyperreal, m: u64) -> Hyperreal {
    let mut acc = Hyperreal::zero(term.base());
    for _ in 0..m {
        acc = acc.add(term).unwrap();
    }
    acc
}

pub fn is_canonical(x: &Hyperreal) -> bool {
    let ks: Vec<i64> = x.terms().map(|(k, _)| k).collect();
    x.terms().all(|(_, c)| !c.is_zero()) && ks.windows(2).all(|w| w[0] > w[1])
}
