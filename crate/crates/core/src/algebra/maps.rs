//! The automorphism `phi`, the star-sum map and `t`-interpolation.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::coefficient::{int, Coefficient};
use crate::algebra::combo::WordCombo;
use crate::error::{Error, Result};
use crate::index::{Letter, Word};

/// `phi` on a single word: `x -> x + y`, `y -> -y`.
pub fn phi_word(w: &Word) -> WordCombo {
    let mut acc: Vec<(Vec<Letter>, i64)> = vec![(Vec::new(), 1)];
    for &l in w.letters() {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (mut v, c) in acc {
            match l {
                Letter::Y => {
                    v.push(Letter::Y);
                    next.push((v, -c));
                }
                Letter::X => {
                    let mut v2 = v.clone();
                    v.push(Letter::X);
                    v2.push(Letter::Y);
                    next.push((v, c));
                    next.push((v2, c));
                }
            }
        }
        acc = next;
    }
    WordCombo::from_terms(acc.into_iter().map(|(v, c)| (Word::new(v), Coefficient::from_int(c))))
}

/// The ring automorphism `phi`, extended linearly.
pub fn phi(a: &WordCombo) -> WordCombo {
    a.map_linear(|w| Ok(phi_word(w))).expect("phi is total")
}

/// `S(e_{k_1} ... e_{k_r})`: the sum of the words of all coarsenings.
pub fn star_sum_word(w: &Word) -> Result<WordCombo> {
    if w.is_empty() {
        return Err(Error::Domain("star sum of the empty word".into()));
    }
    let k = w.to_index()?;
    Ok(WordCombo::from_terms(k.coarsenings().into_iter().map(|l| (l.to_word(), Coefficient::one()))))
}

/// The star-sum map extended linearly.
pub fn star_sum(a: &WordCombo) -> Result<WordCombo> {
    a.map_linear(star_sum_word)
}

/// `e_k -> sum over coarsenings l of (sign * t)^(dep k - dep l) e_l`, wordwise.
///
/// `sign` is `1` or `-1`; the two substitutions are mutually inverse.
pub fn interpolate(a: &WordCombo, sign: i32) -> Result<WordCombo> {
    let st = Coefficient::from_coeffs(vec![int(0), int(sign.signum() as i64)]);
    a.map_linear(|w| {
        let k = w.to_index()?;
        let mut out = WordCombo::zero();
        for l in k.coarsenings() {
            let mut c = Coefficient::one();
            for _ in 0..k.depth() - l.depth() {
                c = &c * &st;
            }
            out.add_term(l.to_word(), &c);
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::Index;

    fn w(s: &str) -> WordCombo {
        WordCombo::from_word(Word::parse(s).unwrap())
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("y")), -w("y"));
        assert_eq!(phi(&w("yx")), -(&w("yx") + &w("yy")));
        assert_eq!(phi(&phi(&w("yxy"))), w("yxy"));
        assert_eq!(phi(&WordCombo::one()), WordCombo::one());
    }

    #[test]
    fn star_sum_examples() {
        let e = |v: &[u32]| WordCombo::from_index(&Index::from_slice(v));
        assert_eq!(star_sum(&e(&[1, 2])).unwrap(), &e(&[1, 2]) + &e(&[3]));
        assert_eq!(star_sum(&e(&[2])).unwrap(), e(&[2]));
        assert_eq!(star_sum(&e(&[1, 1, 2])).unwrap().len(), 4);
        assert!(star_sum(&WordCombo::one()).is_err());
    }

    #[test]
    fn interpolate_examples() {
        let e = |v: &[u32]| WordCombo::from_index(&Index::from_slice(v));
        let want = &e(&[1, 2]) + &e(&[3]).scale(&Coefficient::t_pow(1));
        assert_eq!(interpolate(&e(&[1, 2]), 1).unwrap(), want);
        let a = e(&[1, 1, 2]);
        assert_eq!(interpolate(&interpolate(&a, 1).unwrap(), -1).unwrap(), a);
        assert_eq!(interpolate(&e(&[2]), 1).unwrap(), e(&[2]));
        assert_eq!(interpolate(&e(&[2]), -1).unwrap(), e(&[2]));
    }
}
