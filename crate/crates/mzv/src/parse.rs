//! Command-line argument parsers.

use anyhow::{anyhow, bail, Context, Result};
use mzv_core::algebra::Rational;
use mzv_core::{Composition, Index, IndexClass, Word};
use num_traits::Zero;

fn entries(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<u32>().with_context(|| format!("bad entry {p:?}")))
        .collect()
}

/// `"1,2"`, `"(1,2)"` or `"[1,2]"`; the empty string is the empty index.
pub fn index(s: &str) -> Result<Index> {
    Ok(Index::new(entries(s)?)?)
}

pub fn composition(s: &str) -> Result<Composition> {
    Ok(Composition::new(entries(s)?)?)
}

pub fn word(s: &str) -> Result<Word> {
    if s == "1" {
        return Ok(Word::empty());
    }
    Ok(Word::parse(s)?)
}

/// `"p/q"` or an integer.
pub fn rational(s: &str) -> Result<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = p.parse().with_context(|| format!("bad numerator in {s:?}"))?;
    let q: num_bigint::BigInt = q.parse().with_context(|| format!("bad denominator in {s:?}"))?;
    if q.is_zero() {
        bail!("zero denominator in {s:?}");
    }
    Ok(Rational::new(p, q))
}

/// A rational sample point for `t`, which must not be an integer.
pub fn t_sample(s: &str) -> Result<Rational> {
    let t = rational(s)?;
    if t.is_integer() {
        bail!("t = {t} is an integer; sample points must be non-integer rationals");
    }
    Ok(t)
}

pub fn class(s: &str) -> Result<IndexClass> {
    match s {
        "adm" | "admissible" => Ok(IndexClass::Admissible),
        "ge2" => Ok(IndexClass::Ge2),
        "hoffman" | "h" => Ok(IndexClass::Hoffman),
        _ => Err(anyhow!("unknown class {s:?} (expected adm, ge2 or hoffman)")),
    }
}
