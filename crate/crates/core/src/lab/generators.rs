//! Generators for the named relation families.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{circled, harmonic, phi, Coefficient, Rational, WordCombo};
use crate::error::{Error, Result};
use crate::expand::{drop1_generator, Expander};
use crate::index::{Index, Letter, Word};
use crate::sums::eval_z_dia;

/// The relation families that produce elements of `H^0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    KanekoSakata,
    MuraharaSakata,
    Drop1,
    LinKaw,
    LinKawStar,
    Duality,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::KanekoSakata,
        Family::MuraharaSakata,
        Family::Drop1,
        Family::LinKaw,
        Family::LinKawStar,
        Family::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KanekoSakata => "kaneko-sakata",
            Family::MuraharaSakata => "murahara-sakata",
            Family::Drop1 => "drop1",
            Family::LinKaw => "linkaw",
            Family::LinKawStar => "linkaw-star",
            Family::Duality => "duality",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One named parameter of a generated relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Nat(u64),
    Index(Index),
    Word(Word),
}

/// `LHS - RHS` of one relation, as an element of `H^0`.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: Family,
    pub params: Vec<(&'static str, Param)>,
    pub combo: WordCombo,
}

fn sum_of_indices(it: impl IntoIterator<Item = (Index, i64)>) -> WordCombo {
    let mut out = WordCombo::zero();
    for (k, c) in it {
        out.add_term(k.to_word(), &Coefficient::from_int(c));
    }
    out
}

fn ones_then(a: u32, b: u32) -> Vec<u32> {
    let mut v = vec![1; a as usize - 1];
    v.push(b + 1);
    v
}

fn entrywise_sum(c: &Index, d: &Index) -> Index {
    Index::from_slice(&c.entries().iter().zip(d.entries()).map(|(x, y)| x + y).collect::<Vec<_>>())
}

/// `zeta({1}^{a-1}, b+1)` minus its expansion over pairs of compositions.
pub fn kaneko_sakata(a: u32, b: u32) -> Result<RelationInstance> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!("need a, b >= 1, got ({a}, {b})")));
    }
    let inst = murahara_sakata(a, &Index::from_slice(&[b]))?;
    Ok(RelationInstance {
        family: Family::KanekoSakata,
        params: vec![("a", Param::Nat(a.into())), ("b", Param::Nat(b.into()))],
        combo: inst.combo,
    })
}

/// The sum over `(a_1..a_s)` of `zeta({1}^{a_1-1}, b_1+1, ...)` minus the
/// signed sum over refinements `d` of `b`.
pub fn murahara_sakata(a: u32, b: &Index) -> Result<RelationInstance> {
    let s = b.depth();
    if s == 0 {
        return Err(Error::Domain("b must be nonempty".into()));
    }
    if (a as usize) < s {
        return Err(Error::Domain(format!("need a >= depth(b) = {s}, got a = {a}")));
    }
    let mut terms = Vec::new();
    for parts in Index::all_of(a, s) {
        let mut k = Vec::new();
        for (&ai, &bi) in parts.entries().iter().zip(b.entries()) {
            k.extend(ones_then(ai, bi));
        }
        terms.push((Index::from_slice(&k), 1));
    }
    let bw = b.weight();
    for r in s..=(a.min(bw) as usize) {
        let sign = if (r - s).is_multiple_of(2) { -1 } else { 1 };
        let ds: Vec<Index> = Index::all_of(bw, r).into_iter().filter(|d| b.is_coarsening_of(d)).collect();
        for c in Index::all_of(a, r) {
            for d in &ds {
                terms.push((entrywise_sum(&c, d), sign));
            }
        }
    }
    Ok(RelationInstance {
        family: Family::MuraharaSakata,
        params: vec![("a", Param::Nat(a.into())), ("b", Param::Index(b.clone()))],
        combo: sum_of_indices(terms),
    })
}

fn require_y_word(w: &Word, name: &str) -> Result<()> {
    if w.letters().first() != Some(&Letter::Y) {
        return Err(Error::Domain(format!("{name} = {w} must be a nonempty word starting with y")));
    }
    Ok(())
}

/// `phi(w1 * w2) x`.
pub fn linkaw(w1: &Word, w2: &Word) -> Result<RelationInstance> {
    require_y_word(w1, "w1")?;
    require_y_word(w2, "w2")?;
    let prod = harmonic(&WordCombo::from_word(w1.clone()), &WordCombo::from_word(w2.clone()))?;
    Ok(RelationInstance {
        family: Family::LinKaw,
        params: vec![("w1", Param::Word(w1.clone())), ("w2", Param::Word(w2.clone()))],
        combo: phi(&prod).push_letter(Letter::X),
    })
}

/// `(phi(w1 * w2) x) * w3` with `w3` in `H^{>=2}` (the empty word allowed).
pub fn linkaw_star(w1: &Word, w2: &Word, w3: &Word) -> Result<RelationInstance> {
    if !w3.is_empty() && !w3.is_ge2() {
        return Err(Error::Domain(format!("w3 = {w3} must have all entries >= 2")));
    }
    let base = linkaw(w1, w2)?;
    let combo = harmonic(&base.combo, &WordCombo::from_word(w3.clone()))?;
    let mut params = base.params;
    params.push(("w3", Param::Word(w3.clone())));
    Ok(RelationInstance { family: Family::LinKawStar, params, combo })
}

/// `w - D(w)` for an admissible word `w`.
pub fn drop1(ex: &mut Expander, w: &Word) -> Result<RelationInstance> {
    Ok(RelationInstance {
        family: Family::Drop1,
        params: vec![("w", Param::Word(w.clone()))],
        combo: drop1_generator(ex, w)?,
    })
}

/// `k - k_dagger` for an admissible index.
pub fn duality(k: &Index) -> Result<RelationInstance> {
    let dual = k.mzv_dual()?;
    Ok(RelationInstance {
        family: Family::Duality,
        params: vec![("k", Param::Index(k.clone()))],
        combo: WordCombo::from_index(k) - WordCombo::from_index(&dual),
    })
}

fn y_power(m: u32) -> WordCombo {
    WordCombo::from_word(Word::new(vec![Letter::Y; m as usize]))
}

/// Both sides of the Kawashima-type relation for the modified sums,
/// `sum_{a+b=m, a,b>=1} Z(phi(w1) (*) y^a) Z(phi(w2) (*) y^b) = Z(phi(w1*w2) (*) y^m)`.
#[derive(Clone, Debug)]
pub struct KawashimaCase {
    pub w1: Word,
    pub w2: Word,
    pub m: u32,
    pub lhs: Vec<(WordCombo, WordCombo)>,
    pub rhs: WordCombo,
}

impl KawashimaCase {
    pub fn new(w1: &Word, w2: &Word, m: u32) -> Result<Self> {
        require_y_word(w1, "w1")?;
        require_y_word(w2, "w2")?;
        if m == 0 {
            return Err(Error::Domain("m must be positive".into()));
        }
        let p1 = phi(&WordCombo::from_word(w1.clone()));
        let p2 = phi(&WordCombo::from_word(w2.clone()));
        let mut lhs = Vec::new();
        for a in 1..m {
            lhs.push((circled(&p1, &y_power(a))?, circled(&p2, &y_power(m - a))?));
        }
        let prod = harmonic(&WordCombo::from_word(w1.clone()), &WordCombo::from_word(w2.clone()))?;
        let rhs = circled(&phi(&prod), &y_power(m))?;
        Ok(KawashimaCase { w1: w1.clone(), w2: w2.clone(), m, lhs, rhs })
    }

    /// Both sides evaluated at `N`.
    pub fn sides(&self, n: u64) -> Result<(Rational, Rational)> {
        let mut l = Rational::default();
        for (a, b) in &self.lhs {
            l += eval_z_dia(a, n)? * eval_z_dia(b, n)?;
        }
        Ok((l, eval_z_dia(&self.rhs, n)?))
    }

    pub fn holds_at(&self, n: u64) -> Result<bool> {
        let (l, r) = self.sides(n)?;
        Ok(l == r)
    }
}
