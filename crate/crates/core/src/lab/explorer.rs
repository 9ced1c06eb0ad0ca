//! Weight-wise comparison of the span of `LinKaw*` with `Drop1`.
//!
//! Triples `(w1, w2, w3)` are enumerated with `w3` running over the `>= 2`
//! indices by ascending weight (the empty word first) and, for each `w3`,
//! the pairs `(w1, w2)` of words starting with `y` of the remaining weight
//! in lexicographic order. Since `w1 * w2 = w2 * w1`, only pairs with
//! `w1 <= w2` are listed.

use alloc::vec::Vec;

use crate::algebra::WordCombo;
use crate::error::{Error, Result};
use crate::index::{Index, IndexClass, Letter, Word};
use crate::lab::generators::linkaw_star;
use crate::lab::rank::RowReducer;

pub const DEFAULT_BUDGET: usize = 5000;

pub const ORDER: &str = "w3 over >=2 indices by ascending weight, then (w1, w2) with w1 <= w2 in lexicographic order";

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `dim(Drop1 in H^0_k) = 2^{k-2} - F_{k-1}`.
pub fn drop1_dimension(k: u32) -> u64 {
    assert!(k >= 2, "weight must be at least 2");
    (1u64 << (k - 2)) - fibonacci(k - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub w1: Word,
    pub w2: Word,
    pub w3: Word,
}

impl Triple {
    pub fn generate(&self) -> Result<WordCombo> {
        Ok(linkaw_star(&self.w1, &self.w2, &self.w3)?.combo)
    }
}

fn words_of_length(n: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(1 << n);
    for bits in 0..(1u64 << n) {
        let letters = (0..n).rev().map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X });
        out.push(Word::new(letters.collect()));
    }
    out
}

fn y_words(weight: usize) -> Vec<Word> {
    let y = Word::new(alloc::vec![Letter::Y]);
    let mut out: Vec<Word> = words_of_length(weight - 1).iter().map(|w| y.concat(w)).collect();
    out.sort();
    out
}

/// All triples of weight `k` in enumeration order.
pub fn triples(k: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for j in 0..=k.saturating_sub(3) {
        if j == 1 {
            continue;
        }
        let w3s: Vec<Word> = if j == 0 {
            alloc::vec![Word::empty()]
        } else {
            Index::enumerate(j, IndexClass::Ge2).unwrap_or_default().iter().map(Index::to_word).collect()
        };
        let rest = (k - 1 - j) as usize;
        let mut pairs = Vec::new();
        for a in 1..rest {
            for w1 in y_words(a) {
                for w2 in y_words(rest - a) {
                    if w1 <= w2 {
                        pairs.push((w1.clone(), w2));
                    }
                }
            }
        }
        pairs.sort();
        for w3 in &w3s {
            for (w1, w2) in &pairs {
                out.push(Triple { w1: w1.clone(), w2: w2.clone(), w3: w3.clone() });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplorerReport {
    pub weight: u32,
    pub rank: usize,
    pub target: u64,
    pub met: bool,
    /// Triples generated before stopping.
    pub tried: usize,
    /// Triples that raised the rank.
    pub useful: Vec<Triple>,
    pub budget: usize,
    /// True when the budget ran out before the target was reached.
    pub exhausted: bool,
}

/// Runs the explorer, generating `chunk` triples at a time with `generate`
/// and reducing the rows in order.
pub fn explore_with<G>(k: u32, budget: usize, chunk: usize, mut generate: G) -> Result<ExplorerReport>
where
    G: FnMut(&[Triple]) -> Result<Vec<WordCombo>>,
{
    if k < 3 {
        return Err(Error::Domain("explorer needs weight >= 3".into()));
    }
    let target = drop1_dimension(k);
    let all = triples(k);
    let mut red = RowReducer::new(k);
    let mut useful = Vec::new();
    let mut tried = 0;
    'outer: for batch in all.chunks(chunk.max(1)) {
        if red.rank() as u64 >= target || tried >= budget {
            break;
        }
        let batch = &batch[..batch.len().min(budget - tried)];
        let rows = generate(batch)?;
        for (t, row) in batch.iter().zip(&rows) {
            tried += 1;
            if red.insert(row)? {
                useful.push(t.clone());
            }
            if red.rank() as u64 >= target {
                break 'outer;
            }
        }
    }
    let met = red.rank() as u64 >= target;
    Ok(ExplorerReport {
        weight: k,
        rank: red.rank(),
        target,
        met,
        tried,
        useful,
        budget,
        exhausted: !met && tried >= budget,
    })
}

pub fn conjecture_explorer(k: u32, budget: usize) -> Result<ExplorerReport> {
    explore_with(k, budget, 64, |ts| ts.iter().map(Triple::generate).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        assert_eq!(drop1_dimension(3), 1);
        assert_eq!(drop1_dimension(5), 5);
        assert_eq!(drop1_dimension(7), 24);
        assert_eq!(drop1_dimension(8), 51);
    }

    #[test]
    fn weight_three_is_euler() {
        let r = conjecture_explorer(3, DEFAULT_BUDGET).unwrap();
        assert!(r.met);
        assert_eq!(r.rank, 1);
        assert_eq!(r.tried, 1);
        assert!(conjecture_explorer(2, 10).is_err());
    }

    #[test]
    fn small_budget_is_reported_as_exhausted() {
        let r = conjecture_explorer(6, 2).unwrap();
        assert!(!r.met);
        assert!(r.exhausted);
        assert_eq!(r.tried, 2);
    }

    #[test]
    fn enumeration_starts_with_empty_w3() {
        let t = triples(5);
        assert!(t[0].w3.is_empty());
        assert!(t.iter().all(|t| t.w1 <= t.w2));
        let first_nonempty = t.iter().position(|t| !t.w3.is_empty()).unwrap();
        assert!(t[first_nonempty..].iter().all(|t| !t.w3.is_empty()));
    }
}
