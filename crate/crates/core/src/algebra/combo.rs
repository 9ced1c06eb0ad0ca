use alloc::collections::btree_map::{self, BTreeMap};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::algebra::coefficient::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::index::{Index, Letter, Word};

/// A finite formal sum of words with [`Coefficient`]s. Zero terms are pruned.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordCombo {
    terms: BTreeMap<Word, Coefficient>,
}

impl WordCombo {
    pub fn zero() -> Self {
        WordCombo { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, Coefficient::one())
    }

    pub fn from_index(k: &Index) -> Self {
        Self::from_word(k.to_word())
    }

    pub fn monomial(w: Word, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    /// Collects `(word, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Word, Coefficient)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in it {
            out.add_term(w, &c);
        }
        out
    }

    /// Collects `(index, coefficient)` pairs, merging repeats.
    pub fn from_index_terms<'a, I: IntoIterator<Item = (&'a Index, Coefficient)>>(it: I) -> Self {
        Self::from_terms(it.into_iter().map(|(k, c)| (k.to_word(), c)))
    }

    pub fn add_term(&mut self, w: Word, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WordCombo, s: &Coefficient) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * s));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, Coefficient> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &Coefficient) -> WordCombo {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn scale_rational(&self, s: &Rational) -> WordCombo {
        self.scale(&Coefficient::from(s.clone()))
    }

    /// Concatenation product.
    pub fn concat(&self, other: &WordCombo) -> WordCombo {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        out
    }

    /// Appends `suffix` to every word.
    pub fn concat_word(&self, suffix: &Word) -> WordCombo {
        WordCombo {
            terms: self.terms.iter().map(|(w, c)| (w.concat(suffix), c.clone())).collect(),
        }
    }

    /// Appends a single letter to every word.
    pub fn push_letter(&self, l: Letter) -> WordCombo {
        self.concat_word(&Word::new(alloc::vec![l]))
    }

    pub fn is_in_h0(&self) -> bool {
        self.words().all(Word::is_admissible)
    }

    pub fn is_in_h1(&self) -> bool {
        self.words().all(Word::is_in_h1)
    }

    pub fn is_in_ge2(&self) -> bool {
        self.words().all(Word::is_ge2)
    }

    /// Common degree of all terms; `Some(None)` for zero, `None` if mixed.
    pub fn homogeneous_degree(&self) -> Option<Option<u32>> {
        let mut degs = self.words().map(Word::degree);
        match degs.next() {
            None => Some(None),
            Some(d) => degs.all(|e| e == d).then_some(Some(d)),
        }
    }

    /// True when every coefficient is an integer constant.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.as_integer().is_some())
    }

    /// True when no coefficient depends on `t`.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.degree().unwrap_or(0) == 0)
    }

    pub fn require_h0(&self) -> Result<()> {
        match self.words().find(|w| !w.is_admissible()) {
            None => Ok(()),
            Some(w) => Err(Error::NotAdmissible(format!("word {w} in combination"))),
        }
    }

    pub fn require_h1(&self) -> Result<()> {
        match self.words().find(|w| !w.is_in_h1()) {
            None => Ok(()),
            Some(w) => Err(Error::Domain(format!("word {w} does not start with y"))),
        }
    }

    /// Terms as `(index, coefficient)` pairs; every word must lie in `H^1`.
    pub fn index_terms(&self) -> Result<Vec<(Index, Coefficient)>> {
        self.terms.iter().map(|(w, c)| Ok((w.to_index()?, c.clone()))).collect()
    }

    /// Substitutes a rational value for `t` in every coefficient.
    pub fn eval_t(&self, t: &Rational) -> WordCombo {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), Coefficient::from(c.eval(t)))))
    }

    /// Applies a linear map defined on words.
    pub fn map_linear<F>(&self, mut f: F) -> Result<WordCombo>
    where
        F: FnMut(&Word) -> Result<WordCombo>,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }
}

impl Add<&WordCombo> for &WordCombo {
    type Output = WordCombo;
    fn add(self, rhs: &WordCombo) -> WordCombo {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::one());
        out
    }
}

impl Add for WordCombo {
    type Output = WordCombo;
    fn add(self, rhs: WordCombo) -> WordCombo {
        &self + &rhs
    }
}

impl Sub<&WordCombo> for &WordCombo {
    type Output = WordCombo;
    fn sub(self, rhs: &WordCombo) -> WordCombo {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::from_int(-1));
        out
    }
}

impl Sub for WordCombo {
    type Output = WordCombo;
    fn sub(self, rhs: WordCombo) -> WordCombo {
        &self - &rhs
    }
}

impl Neg for &WordCombo {
    type Output = WordCombo;
    fn neg(self) -> WordCombo {
        self.scale(&Coefficient::from_int(-1))
    }
}

impl Neg for WordCombo {
    type Output = WordCombo;
    fn neg(self) -> WordCombo {
        -&self
    }
}

impl fmt::Display for WordCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.degree() == Some(0) {
                write!(f, "{c}*{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
