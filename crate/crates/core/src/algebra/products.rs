//! Harmonic (quasi-shuffle) products on `H^1` and the block-merging product `⊛`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::mem;

use crate::algebra::coefficient::Coefficient;
use crate::algebra::combo::WordCombo;
use crate::error::{Error, Result};
use crate::index::Index;

/// Sign of the merged-block term in a quasi-shuffle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Merge {
    /// The harmonic product `*`.
    Plus,
    /// The star-harmonic product `*̄`.
    Minus,
}

impl Merge {
    fn sign(self) -> i64 {
        match self {
            Merge::Plus => 1,
            Merge::Minus => -1,
        }
    }
}

type Counts = BTreeMap<Vec<u32>, i64>;

fn bump(map: &mut Counts, key: Vec<u32>, by: i64) {
    if by == 0 {
        return;
    }
    let slot = map.entry(key).or_insert(0);
    *slot = slot.checked_add(by).expect("quasi-shuffle multiplicity overflow");
}

fn extend_all(into: &mut Counts, from: &Counts, last: u32, sign: i64) {
    for (k, &c) in from {
        let mut key = Vec::with_capacity(k.len() + 1);
        key.extend_from_slice(k);
        key.push(last);
        bump(into, key, c * sign);
    }
}

/// Quasi-shuffle of two index sequences with integer multiplicities.
///
/// Fills the table of products of all prefix pairs row by row, following the
/// recursion on the last blocks.
pub fn quasi_shuffle(u: &[u32], v: &[u32], merge: Merge) -> Counts {
    let sign = merge.sign();
    let single = |s: &[u32]| -> Counts { BTreeMap::from([(s.to_vec(), 1)]) };
    // prev[j] = product of u[..i-1] and v[..j]
    let mut prev: Vec<Counts> = (0..=v.len()).map(|j| single(&v[..j])).collect();
    let mut cur: Vec<Counts> = Vec::with_capacity(v.len() + 1);
    for i in 1..=u.len() {
        cur.clear();
        cur.push(single(&u[..i]));
        for j in 1..=v.len() {
            let mut cell = Counts::new();
            extend_all(&mut cell, &cur[j - 1], v[j - 1], 1);
            extend_all(&mut cell, &prev[j], u[i - 1], 1);
            extend_all(&mut cell, &prev[j - 1], u[i - 1] + v[j - 1], sign);
            cell.retain(|_, c| *c != 0);
            cur.push(cell);
        }
        mem::swap(&mut prev, &mut cur);
    }
    prev.pop().unwrap()
}

/// Quasi-shuffle of two indices.
pub fn quasi_shuffle_indices(u: &Index, v: &Index, merge: Merge) -> Vec<(Index, i64)> {
    quasi_shuffle(u.entries(), v.entries(), merge)
        .into_iter()
        .map(|(k, c)| (Index::from_slice(&k), c))
        .collect()
}

fn bilinear<F>(a: &WordCombo, b: &WordCombo, mut on_words: F) -> Result<WordCombo>
where
    F: FnMut(&Index, &Index) -> Vec<(Index, i64)>,
{
    let ai = a.index_terms()?;
    let bi = b.index_terms()?;
    let mut out = WordCombo::zero();
    for (u, cu) in &ai {
        for (v, cv) in &bi {
            let c = cu * cv;
            for (k, m) in on_words(u, v) {
                out.add_term(k.to_word(), &(&c * &Coefficient::from_int(m)));
            }
        }
    }
    Ok(out)
}

/// The harmonic product `a * b`.
pub fn harmonic(a: &WordCombo, b: &WordCombo) -> Result<WordCombo> {
    a.require_h1()?;
    b.require_h1()?;
    bilinear(a, b, |u, v| quasi_shuffle_indices(u, v, Merge::Plus))
}

/// The star-harmonic product `a *̄ b`.
pub fn star_harmonic(a: &WordCombo, b: &WordCombo) -> Result<WordCombo> {
    a.require_h1()?;
    b.require_h1()?;
    bilinear(a, b, |u, v| quasi_shuffle_indices(u, v, Merge::Minus))
}

/// `u ⊛ v`: the harmonic product of the parts before the last blocks, followed
/// by the merged last block.
pub fn circled_indices(u: &Index, v: &Index) -> Vec<(Index, i64)> {
    let (ku, pu) = u.entries().split_last().expect("nonempty index");
    let (kv, pv) = v.entries().split_last().expect("nonempty index");
    quasi_shuffle(pu, pv, Merge::Plus)
        .into_iter()
        .map(|(mut k, c)| {
            k.push(ku + kv);
            (Index::from_slice(&k), c)
        })
        .collect()
}

/// The product `a ⊛ b` on `yH`.
pub fn circled(a: &WordCombo, b: &WordCombo) -> Result<WordCombo> {
    for w in a.words().chain(b.words()) {
        if w.is_empty() {
            return Err(Error::Domain("the product ⊛ is undefined on the empty word".into()));
        }
    }
    a.require_h1()?;
    b.require_h1()?;
    bilinear(a, b, circled_indices)
}
