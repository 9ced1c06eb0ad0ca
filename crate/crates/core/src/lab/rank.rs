//! Exact rank of sets of weight-homogeneous elements of `H^0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{Rational, WordCombo};
use crate::error::{Error, Result};
use crate::expand::admissible_words;
use crate::index::Word;

/// The admissible words of one weight, numbered in sorted order.
#[derive(Clone, Debug)]
pub struct WordBasis {
    weight: u32,
    pos: BTreeMap<Word, usize>,
}

impl WordBasis {
    pub fn new(weight: u32) -> Self {
        let pos = admissible_words(weight).into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        WordBasis { weight, pos }
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    /// Coordinates of `a` in this basis.
    pub fn coords(&self, a: &WordCombo) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (w, c) in a.iter() {
            let Some(&i) = self.pos.get(w) else {
                return Err(Error::Domain(format!("{w} is not an admissible word of weight {}", self.weight)));
            };
            v[i] = c
                .as_rational()
                .ok_or_else(|| Error::Domain(format!("coefficient of {w} depends on t")))?;
        }
        Ok(v)
    }
}

fn integer_row(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&den / x.denom())).collect()
}

/// Rank over `Q` by fraction-free elimination.
pub fn rank_exact(rows: &[WordCombo], weight: u32) -> Result<usize> {
    let basis = WordBasis::new(weight);
    let mut m = Vec::with_capacity(rows.len());
    for r in rows {
        m.push(integer_row(&basis.coords(r)?));
    }
    Ok(bareiss_rank(m, basis.len()))
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            let f = core::mem::take(&mut row[col]);
            for j in col + 1..cols {
                row[j] = (&pivot[col] * &row[j] - &f * &pivot[j]) / &prev;
            }
        }
        prev = pivot[col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Row echelon form built one row at a time.
#[derive(Clone, Debug)]
pub struct RowReducer {
    basis: WordBasis,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(weight: u32) -> Self {
        RowReducer { basis: WordBasis::new(weight), rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Adds `a` and reports whether the rank grew.
    pub fn insert(&mut self, a: &WordCombo) -> Result<bool> {
        let mut v = self.basis.coords(a)?;
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(*p) {
                *x -= &f * y;
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, v));
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&[WordCombo::zero()], 4).unwrap(), 0);
        let basis: Vec<WordCombo> = admissible_words(4).into_iter().map(WordCombo::from_word).collect();
        assert_eq!(rank_exact(&basis, 4).unwrap(), 4);
        let v = basis[0].clone() - basis[2].scale_rational(&rat(1, 3));
        assert_eq!(rank_exact(&[v.clone(), v.scale_rational(&rat(2, 1))], 4).unwrap(), 1);
        assert!(rank_exact(&[WordCombo::from_word(Word::parse("yx").unwrap())], 4).is_err());
    }

    #[test]
    fn reducer_matches_batch() {
        let words = admissible_words(5);
        let rows: Vec<WordCombo> = words
            .windows(3)
            .map(|w| {
                WordCombo::from_word(w[0].clone()) - WordCombo::from_word(w[1].clone()).scale_rational(&rat(2, 1))
                    + WordCombo::from_word(w[2].clone())
            })
            .collect();
        let mut red = RowReducer::new(5);
        for r in &rows {
            red.insert(r).unwrap();
        }
        assert_eq!(red.rank(), rank_exact(&rows, 5).unwrap());
        assert_eq!(red.dimension(), 8);
    }
}
