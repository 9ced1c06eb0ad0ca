//! Indices, words over `{x, y}` and compositions.
//!
//! An index `(k_1, ..., k_r)` corresponds to the word `e_{k_1} ... e_{k_r}`
//! with `e_k = y x^{k-1}`. An admissible word `y^{c_1} x^{c_2} ... y^{c_{2s-1}}
//! x^{c_{2s}}` corresponds to the composition `(c_1, ..., c_{2s})`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
///
/// Ordered canonically: by weight, then depth, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Index(Vec<u32>);

/// Weight, depth and height of an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexStats {
    pub weight: u32,
    pub depth: usize,
    pub height: usize,
}

/// Membership of an index in the three classes of interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub admissible: bool,
    pub ge2: bool,
    pub hoffman: bool,
}

/// The index classes that can be enumerated per weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexClass {
    /// Last entry at least 2.
    Admissible,
    /// Every entry at least 2.
    Ge2,
    /// Every entry in `{2, 3}`.
    Hoffman,
}

impl Index {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::Domain(format!("index entries must be positive: {entries:?}")));
        }
        Ok(Index(entries))
    }

    /// Builds an index from entries already known to be positive.
    ///
    /// # Panics
    /// Panics if an entry is zero.
    pub fn from_slice(entries: &[u32]) -> Self {
        assert!(entries.iter().all(|&k| k > 0), "index entries must be positive");
        Index(entries.to_vec())
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&k| k > 1).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats { weight: self.weight(), depth: self.depth(), height: self.height() }
    }

    /// Nonempty with last entry at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_some_and(|&k| k >= 2)
    }

    /// Nonempty with every entry at least 2.
    pub fn is_ge2(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&k| k >= 2)
    }

    /// Nonempty with every entry 2 or 3.
    pub fn is_hoffman(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&k| k == 2 || k == 3)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            admissible: self.is_admissible(),
            ge2: self.is_ge2(),
            hoffman: self.is_hoffman(),
        }
    }

    pub fn is_in(&self, class: IndexClass) -> bool {
        match class {
            IndexClass::Admissible => self.is_admissible(),
            IndexClass::Ge2 => self.is_ge2(),
            IndexClass::Hoffman => self.is_hoffman(),
        }
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(format!("{self}")))
        }
    }

    /// 1-based positions whose entry equals 1.
    pub fn one_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &k)| k == 1).map(|(i, _)| i + 1)
    }

    /// The word `e_{k_1} ... e_{k_r}`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for &k in &self.0 {
            letters.push(Letter::Y);
            letters.extend(core::iter::repeat_n(Letter::X, k as usize - 1));
        }
        Word(letters)
    }

    /// The index with `k_i` and `k_{i+1}` merged for every `i` in `plus`.
    ///
    /// `plus` holds 1-based gap positions in `1..depth`.
    pub fn merge_at(&self, plus: u64) -> Index {
        let mut out = Vec::with_capacity(self.0.len());
        for (i, &k) in self.0.iter().enumerate() {
            if i > 0 && plus & (1 << (i - 1)) != 0 {
                *out.last_mut().unwrap() += k;
            } else {
                out.push(k);
            }
        }
        Index(out)
    }

    /// All `2^{r-1}` indices obtained by replacing some commas with pluses,
    /// the index itself included.
    pub fn coarsenings(&self) -> Vec<Index> {
        if self.0.is_empty() {
            return vec![Index::empty()];
        }
        let gaps = self.0.len() - 1;
        (0..1u64 << gaps).map(|plus| self.merge_at(plus)).collect()
    }

    /// True when `self` is obtained from `finer` by merging adjacent entries.
    pub fn is_coarsening_of(&self, finer: &Index) -> bool {
        if self.weight() != finer.weight() {
            return false;
        }
        let mut fine = finer.0.iter();
        for &k in &self.0 {
            let mut acc = 0;
            while acc < k {
                match fine.next() {
                    Some(&f) => acc += f,
                    None => return false,
                }
            }
            if acc != k {
                return false;
            }
        }
        fine.next().is_none()
    }

    /// Hoffman dual: swap commas and pluses in `1 □ 1 □ ... □ 1`.
    pub fn hoffman_dual(&self) -> Result<Index> {
        if self.0.is_empty() {
            return Err(Error::Domain("Hoffman dual of the empty index".into()));
        }
        // separators between the wt unit ones; `true` is a comma
        let mut out = Vec::new();
        let mut run = 1u32;
        let mut first = true;
        for &k in &self.0 {
            if !first {
                // a comma becomes a plus
                run += 1;
            }
            first = false;
            for _ in 1..k {
                // a plus becomes a comma
                out.push(run);
                run = 1;
            }
        }
        out.push(run);
        Ok(Index(out))
    }

    /// MZV duality: reverse the word and exchange `x` and `y`.
    pub fn mzv_dual(&self) -> Result<Index> {
        self.require_admissible()?;
        let w = self.to_word();
        let dual: Vec<Letter> = w.0.iter().rev().map(|l| l.swap()).collect();
        Word(dual).to_index()
    }

    /// All indices of the given weight and depth (compositions of `weight`
    /// into `depth` positive parts), in lexicographic order.
    pub fn all_of(weight: u32, depth: usize) -> Vec<Index> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(depth);
        fn rec(rem: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
            if left == 0 {
                if rem == 0 {
                    out.push(Index(cur.clone()));
                }
                return;
            }
            if rem < left as u32 {
                return;
            }
            for k in 1..=rem - (left as u32 - 1) {
                cur.push(k);
                rec(rem - k, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(weight, depth, &mut cur, &mut out);
        out
    }

    /// Indices of weight `weight` in `class`, in canonical order.
    pub fn enumerate(weight: u32, class: IndexClass) -> Result<Vec<Index>> {
        if weight < 2 {
            return Err(Error::Domain(format!("class enumeration needs weight >= 2, got {weight}")));
        }
        let parts: &dyn Fn(u32, bool) -> bool = match class {
            IndexClass::Admissible => &|k, last| !last || k >= 2,
            IndexClass::Ge2 => &|k, _| k >= 2,
            IndexClass::Hoffman => &|k, _| k == 2 || k == 3,
        };
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            rem: u32,
            cur: &mut Vec<u32>,
            ok: &dyn Fn(u32, bool) -> bool,
            out: &mut Vec<Index>,
        ) {
            for k in 1..=rem {
                let last = k == rem;
                if !ok(k, last) {
                    continue;
                }
                cur.push(k);
                if last {
                    out.push(Index(cur.clone()));
                } else {
                    rec(rem - k, cur, ok, out);
                }
                cur.pop();
            }
        }
        rec(weight, &mut cur, parts, &mut out);
        out.sort();
        Ok(out)
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[u32]> for Index {
    fn from(entries: &[u32]) -> Self {
        Index::from_slice(entries)
    }
}

/// A letter of the Hoffman monoid.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word over `{x, y}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub(crate) Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a string over `x`/`y` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'x' | 'X' => Ok(Letter::X),
                'y' | 'Y' => Ok(Letter::Y),
                _ => Err(Error::Domain(format!("invalid letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree, which equals the weight of the corresponding index.
    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// `H^1`: empty or starting with `y`.
    pub fn is_in_h1(&self) -> bool {
        self.0.first().is_none_or(|&l| l == Letter::Y)
    }

    /// `H^0`: empty, or starting with `y` and ending with `x`.
    pub fn is_admissible(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (None, _) => true,
            (Some(&a), Some(&b)) => a == Letter::Y && b == Letter::X,
            _ => unreachable!(),
        }
    }

    /// `H^{>=2}`: empty, or starting with `y` with every `y` followed by `x`.
    pub fn is_ge2(&self) -> bool {
        if self.0.is_empty() {
            return true;
        }
        self.0[0] == Letter::Y
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, &l)| l == Letter::X || self.0.get(i + 1) == Some(&Letter::X))
    }

    /// Decodes a word of `H^1` into its e-block index.
    pub fn to_index(&self) -> Result<Index> {
        if !self.is_in_h1() {
            return Err(Error::Domain(format!("word {self} does not start with y")));
        }
        let mut out: Vec<u32> = Vec::new();
        for &l in &self.0 {
            match l {
                Letter::Y => out.push(1),
                Letter::X => *out.last_mut().unwrap() += 1,
            }
        }
        Ok(Index(out))
    }

    /// Run-length encoding of an admissible word.
    pub fn to_composition(&self) -> Result<Composition> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible(format!("word {self}")));
        }
        let mut runs: Vec<u32> = Vec::new();
        let mut prev = None;
        for &l in &self.0 {
            if prev == Some(l) {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                prev = Some(l);
            }
        }
        Composition::new(runs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of 1-based positions, at most 64.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Positions(pub u64);

impl FromIterator<usize> for Positions {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut p = Positions(0);
        for i in it {
            p.insert(i);
        }
        p
    }
}

impl Positions {
    pub const EMPTY: Positions = Positions(0);

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..=64).contains(&i), "position {i} out of range");
        self.0 |= 1 << (i - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Positions) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Positions) -> Positions {
        Positions(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }
}

impl fmt::Debug for Positions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Which pairing rule governs the removable positions `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `A` is a union of pairs `{2r, 2r+1}`, `r` in `1..s`; `B` avoids those pairs.
    EvenOdd,
    /// `A` is a union of pairs `{2r-1, 2r}`, `r` in `1..=s`; `B` avoids those pairs.
    OddEven,
}

/// An even-length sequence of positive integers: the run lengths of an
/// admissible word `y^{c_1} x^{c_2} ... y^{c_{2s-1}} x^{c_{2s}}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if !entries.len().is_multiple_of(2) {
            return Err(Error::Domain(format!("composition must have even length: {entries:?}")));
        }
        if entries.contains(&0) {
            return Err(Error::Domain(format!("composition entries must be positive: {entries:?}")));
        }
        if entries.len() > 64 {
            return Err(Error::Domain("composition longer than 64 entries".into()));
        }
        Ok(Composition(entries))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `(y-run, x-run)` pairs.
    pub fn pairs(&self) -> usize {
        self.0.len() / 2
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn to_word(&self) -> Word {
        let mut v = Vec::with_capacity(self.weight() as usize);
        for (i, &c) in self.0.iter().enumerate() {
            let l = if i % 2 == 0 { Letter::Y } else { Letter::X };
            v.extend(core::iter::repeat_n(l, c as usize));
        }
        Word(v)
    }

    /// The index `({1}^{c_1-1}, c_2+1, ..., {1}^{c_{2s-1}-1}, c_{2s}+1)`.
    pub fn to_index(&self) -> Index {
        let mut v = Vec::new();
        for pair in self.0.chunks(2) {
            v.extend(core::iter::repeat_n(1, pair[0] as usize - 1));
            v.push(pair[1] + 1);
        }
        Index(v)
    }

    pub fn from_index(k: &Index) -> Result<Self> {
        k.require_admissible()?;
        k.to_word().to_composition()
    }

    /// Positions holding the value 1.
    pub fn one_positions(&self) -> Positions {
        Positions::from_iter(self.0.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i + 1))
    }

    /// Positions holding a value greater than 1.
    pub fn big_positions(&self) -> Positions {
        Positions::from_iter(self.0.iter().enumerate().filter(|(_, &c)| c > 1).map(|(i, _)| i + 1))
    }

    /// Deletes the positions in `remove` and subtracts 1 at the positions in
    /// `decrement`; both sets use the original numbering.
    pub fn remove_and_subtract(&self, remove: Positions, decrement: Positions) -> Result<Composition> {
        if !remove.is_subset(self.one_positions()) {
            return Err(Error::Domain(format!("removal set {remove:?} contains an entry > 1 in {self}")));
        }
        if !decrement.is_subset(self.big_positions()) {
            return Err(Error::Domain(format!(
                "decrement set {decrement:?} contains an entry equal to 1 in {self}"
            )));
        }
        let v: Vec<u32> = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i + 1))
            .map(|(i, &c)| if decrement.contains(i + 1) { c - 1 } else { c })
            .collect();
        Ok(Composition(v))
    }

    /// The pairs available to `A` under `pairing`, as position sets.
    fn pairs_for(&self, pairing: Pairing) -> Vec<Positions> {
        let s = self.pairs();
        match pairing {
            Pairing::EvenOdd => (1..s).map(|r| Positions::from_iter([2 * r, 2 * r + 1])).collect(),
            Pairing::OddEven => (1..=s).map(|r| Positions::from_iter([2 * r - 1, 2 * r])).collect(),
        }
    }

    /// All legal removal sets `A`: unions of pairs inside the value-1 positions.
    pub fn removal_sets(&self, pairing: Pairing) -> Vec<Positions> {
        let ones = self.one_positions();
        let usable: Vec<Positions> =
            self.pairs_for(pairing).into_iter().filter(|p| p.is_subset(ones)).collect();
        (0..1u64 << usable.len())
            .map(|mask| {
                usable
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .fold(Positions::EMPTY, |acc, (_, p)| acc.union(*p))
            })
            .collect()
    }

    /// All legal decrement sets `B`: subsets of the value->1 positions that
    /// contain none of the pairs of `pairing`.
    pub fn decrement_sets(&self, pairing: Pairing) -> Vec<Positions> {
        let big: Vec<usize> = self.big_positions().iter().collect();
        let forbidden = self.pairs_for(pairing);
        (0..1u64 << big.len())
            .map(|mask| {
                Positions::from_iter(
                    big.iter().enumerate().filter(|(j, _)| mask & (1 << j) != 0).map(|(_, &p)| p),
                )
            })
            .filter(|b| forbidden.iter().all(|p| !p.is_subset(*b)))
            .collect()
    }

    /// The product family of legal `(A, B)` pairs for `pairing`.
    pub fn subset_families(&self, pairing: Pairing) -> Vec<(Positions, Positions)> {
        let bs = self.decrement_sets(pairing);
        self.removal_sets(pairing)
            .into_iter()
            .flat_map(|a| bs.iter().map(move |&b| (a, b)))
            .collect()
    }

    /// All compositions of total weight `weight` (every even length).
    pub fn all_of_weight(weight: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut len = 2;
        while len as u32 <= weight {
            for k in Index::all_of(weight, len) {
                out.push(Composition(k.into_entries()));
            }
            len += 2;
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
