//! The integer recurrence `D` on compositions and the expansion of admissible
//! indices into indices with all entries at least 2.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{interpolate, Coefficient, WordCombo};
use crate::error::{Error, Result};
use crate::index::{Composition, Index, Letter, Pairing, Positions, Word};

type IntCombo = BTreeMap<Word, BigInt>;

/// An expansion `sum c_l zeta(l)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntExpansion {
    terms: BTreeMap<Index, BigInt>,
}

impl IntExpansion {
    pub fn from_terms<I: IntoIterator<Item = (Index, BigInt)>>(it: I) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            *terms.entry(k).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        IntExpansion { terms }
    }

    pub fn get(&self, k: &Index) -> BigInt {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_combo(&self) -> WordCombo {
        WordCombo::from_terms(self.terms.iter().map(|(k, c)| (k.to_word(), Coefficient::from(c.clone()))))
    }
}

fn letters(n: usize, first: Option<Letter>) -> Word {
    let mut v = Vec::with_capacity(n + 1);
    v.extend(first);
    v.extend(core::iter::repeat_n(Letter::X, n));
    Word::new(v)
}

fn accumulate(out: &mut IntCombo, sub: &IntCombo, suffix: &Word, negate: bool) {
    for (w, c) in sub {
        let slot = out.entry(w.concat(suffix)).or_insert_with(BigInt::zero);
        if negate {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
}

/// Evaluates `D` with a memo table keyed by composition.
///
/// The table lives in the expander; use one expander per thread.
#[derive(Default)]
pub struct Expander {
    memo: BTreeMap<Composition, Rc<IntCombo>>,
}

impl Expander {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized compositions.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn frak_d_raw(&mut self, c: &Composition) -> Rc<IntCombo> {
        if let Some(r) = self.memo.get(c) {
            return r.clone();
        }
        let mut out = IntCombo::new();
        if c.is_empty() {
            out.insert(Word::empty(), BigInt::one());
        } else {
            let recurse = |this: &mut Self, a: Positions, b: Positions| {
                let sub = c.remove_and_subtract(a, b).expect("legal subset pair");
                this.frak_d_raw(&sub)
            };
            for (a, b) in c.subset_families(Pairing::EvenOdd) {
                let n = a.len() + b.len();
                if n == 0 {
                    continue;
                }
                let sub = recurse(self, a, b);
                // (-1)^{#B-1}
                let negate = b.len() % 2 == 0;
                accumulate(&mut out, &sub, &letters(n, None), negate);
                if n >= 2 {
                    accumulate(&mut out, &sub, &letters(n - 1, Some(Letter::Y)), negate);
                }
            }
            for (a, b) in c.subset_families(Pairing::OddEven) {
                let n = a.len() + b.len();
                if n < 2 {
                    continue;
                }
                let sub = recurse(self, a, b);
                let negate = b.len() % 2 == 1;
                accumulate(&mut out, &sub, &letters(n - 1, Some(Letter::Y)), negate);
            }
            out.retain(|_, v| !v.is_zero());
        }
        let out = Rc::new(out);
        self.memo.insert(c.clone(), out.clone());
        out
    }

    /// `D(c)` as a word combination with integer coefficients.
    pub fn frak_d(&mut self, c: &Composition) -> WordCombo {
        let raw = self.frak_d_raw(c);
        WordCombo::from_terms(raw.iter().map(|(w, n)| (w.clone(), Coefficient::from(n.clone()))))
    }

    /// The expansion of an admissible index into indices with entries `>= 2`.
    pub fn expand_index(&mut self, k: &Index) -> Result<IntExpansion> {
        let c = Composition::from_index(k)?;
        let raw = self.frak_d_raw(&c);
        Ok(IntExpansion::from_terms(
            raw.iter().map(|(w, n)| (w.to_index().expect("D lands in yH"), n.clone())),
        ))
    }

    /// Linear extension of `D` to `H^0`, with `D(1) = 1`.
    pub fn normal_form(&mut self, a: &WordCombo) -> Result<WordCombo> {
        a.require_h0()?;
        a.map_linear(|w| {
            if w.is_empty() {
                Ok(WordCombo::one())
            } else {
                Ok(self.frak_d(&w.to_composition()?))
            }
        })
    }

    /// True when the normal form of `a` vanishes.
    pub fn is_in_drop1(&mut self, a: &WordCombo) -> Result<bool> {
        Ok(self.normal_form(a)?.is_zero())
    }

    /// Expansion of `zeta^t(k)` over `zeta^t(l)`, `l` with entries `>= 2`,
    /// with coefficients in `Z[t]`.
    pub fn expand_interpolated(&mut self, k: &Index) -> Result<BTreeMap<Index, Coefficient>> {
        k.require_admissible()?;
        let plain = interpolate(&WordCombo::from_index(k), 1)?;
        let reduced = self.normal_form(&plain)?;
        let back = interpolate(&reduced, -1)?;
        back.index_terms().map(|v| v.into_iter().collect())
    }
}

/// `w - D(w)` for a nonempty admissible word.
pub fn drop1_generator(ex: &mut Expander, w: &Word) -> Result<WordCombo> {
    if w.is_empty() {
        return Err(Error::Domain("Drop1 generators need a nonempty word".into()));
    }
    let c = w.to_composition()?;
    Ok(&WordCombo::from_word(w.clone()) - &ex.frak_d(&c))
}

/// All admissible words of degree `k` (the word basis of `H^0_k`), in order.
pub fn admissible_words(k: u32) -> Vec<Word> {
    if k < 2 {
        return vec![];
    }
    let mut out: Vec<Word> = (0..1u64 << (k - 2))
        .map(|mask| {
            let mut v = Vec::with_capacity(k as usize);
            v.push(Letter::Y);
            for b in 0..k - 2 {
                v.push(if mask & (1 << b) != 0 { Letter::Y } else { Letter::X });
            }
            v.push(Letter::X);
            Word::new(v)
        })
        .collect();
    out.sort();
    out
}
