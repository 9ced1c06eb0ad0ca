//! Verification suites: each suite enumerates cases up to a weight bound and
//! every case reports one outcome per `N` (and per sample `t`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{circled, star_harmonic, star_sum_word, Coefficient, Rational, WordCombo};
use crate::error::{Error, Result};
use crate::expand::{admissible_words, Expander};
use crate::index::{Composition, Index, IndexClass, Letter, Word};
use crate::lab::generators::{
    drop1, duality, kaneko_sakata, linkaw, linkaw_star, murahara_sakata, Family, KawashimaCase, Param,
    RelationInstance,
};
use crate::lab::verify::{verify, Mode};
use crate::sums::chain::{Chain, Node, Rel};
use crate::sums::difference::{difference_check, h_n, h_via_f, h_via_g};
use crate::sums::kawashima::{connected_sum, connected_sum_up, f_kawashima, g_kawashima, g_series, SecondFlag};
use crate::sums::mzv::{
    eval_z_dia, zeta_dia, zeta_dia_flat, zeta_dia_star, zeta_flat, zeta_flat_tworow, zeta_n, zeta_tworow,
};

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// `zeta_dia(k) = Z_dia(D(k))` for admissible `k`.
    Central,
    /// `zeta_N = zeta_flat_N`.
    Msw,
    /// Two-row sums against their flat forms.
    TwoRow,
    /// `zeta_dia(k) = zeta_dia(k_dagger)`.
    DiaDuality,
    /// The modified sum against its flat form.
    DiaFlat,
    /// The two star forms.
    Star,
    /// `Z(w1) Z(w2) = Z(w1 * w2)` for `w1` admissible and `w2` in `H^{>=2}`.
    Harmonic,
    /// The difference equation and both expressions for `h_N`.
    Difference,
    /// The Kawashima relation for the modified sums.
    Kawashima,
    /// `F(w1) F(w2) = F(w1 *bar w2)`.
    FHarmonic,
    /// `F(k) = G(k_vee)`.
    FG,
    /// Taylor coefficients of `G`.
    GSeries,
    /// Boundary values of connected sums.
    Boundary,
    /// Transport relations of connected sums.
    Transport,
    /// A relation family, checked by evaluation and by normal form.
    Relation(Family),
}

impl Suite {
    pub const SUMS: [Suite; 14] = [
        Suite::Central,
        Suite::Msw,
        Suite::TwoRow,
        Suite::DiaDuality,
        Suite::DiaFlat,
        Suite::Star,
        Suite::Harmonic,
        Suite::Difference,
        Suite::Kawashima,
        Suite::FHarmonic,
        Suite::FG,
        Suite::GSeries,
        Suite::Boundary,
        Suite::Transport,
    ];

    pub fn all() -> Vec<Suite> {
        let mut v = Suite::SUMS.to_vec();
        v.extend(Family::ALL.into_iter().map(Suite::Relation));
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Central => "central",
            Suite::Msw => "msw",
            Suite::TwoRow => "tworow",
            Suite::DiaDuality => "dia-duality",
            Suite::DiaFlat => "dia-flat",
            Suite::Star => "star",
            Suite::Harmonic => "harmonic",
            Suite::Difference => "difference",
            Suite::Kawashima => "kawashima",
            Suite::FHarmonic => "f-harmonic",
            Suite::FG => "f-g",
            Suite::GSeries => "g-series",
            Suite::Boundary => "boundary",
            Suite::Transport => "transport",
            Suite::Relation(f) => f.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|f| f.name() == s)
    }

    fn uses_t(self) -> bool {
        matches!(self, Suite::FHarmonic | Suite::FG | Suite::Boundary | Suite::Transport)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ranges shared by all suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub max_weight: u32,
    pub n_max: u64,
    pub t_samples: Vec<Rational>,
    /// Largest `m` for the Kawashima relation and the `G` series.
    pub max_m: u32,
}

impl Bounds {
    pub fn new(max_weight: u32, n_max: u64) -> Self {
        Bounds { max_weight, n_max, t_samples: crate::sums::default_t_samples(), max_m: 3 }
    }
}

#[derive(Clone, Debug)]
pub enum Case {
    Central(Index),
    Msw(Index),
    TwoRow(Index, Index),
    DiaDuality(Index),
    DiaFlat(Index),
    Star(Index),
    Harmonic(Word, Word),
    Difference(Composition),
    Kawashima(Word, Word, u32),
    FHarmonic(Index, Index),
    FG(Index),
    GSeries(Index),
    Boundary(Index),
    Transport(Index, Index),
    Relation(RelationInstance),
}

/// The result of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub n: Option<u64>,
    pub t: Option<Rational>,
    pub ok: bool,
    pub detail: Option<String>,
}

impl Outcome {
    fn from_eq(n: u64, t: Option<&Rational>, lhs: Result<Rational>, rhs: Result<Rational>) -> Self {
        let (ok, detail) = match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => (true, None),
            (Ok(a), Ok(b)) => (false, Some(format!("{a} != {b}"))),
            (Err(e), _) | (_, Err(e)) => (false, Some(e.to_string())),
        };
        Outcome { n: Some(n), t: t.cloned(), ok, detail }
    }

    fn from_bool(n: u64, r: Result<bool>) -> Self {
        let (ok, detail) = match r {
            Ok(true) => (true, None),
            Ok(false) => (false, Some("identity fails".into())),
            Err(e) => (false, Some(e.to_string())),
        };
        Outcome { n: Some(n), t: None, ok, detail }
    }
}

fn up(k: &Index) -> Index {
    let mut v = k.entries().to_vec();
    if let Some(x) = v.last_mut() {
        *x += 1;
    }
    Index::from_slice(&v)
}

fn up_front(k: &Index) -> Index {
    let mut v = k.entries().to_vec();
    if let Some(x) = v.first_mut() {
        *x += 1;
    }
    Index::from_slice(&v)
}

fn append_one(k: &Index) -> Index {
    let mut v = k.entries().to_vec();
    v.push(1);
    Index::from_slice(&v)
}

fn prepend_one(k: &Index) -> Index {
    let mut v = vec![1];
    v.extend_from_slice(k.entries());
    Index::from_slice(&v)
}

fn y_power(m: u32) -> WordCombo {
    WordCombo::from_word(Word::new(vec![Letter::Y; m as usize]))
}

/// `F_N` extended linearly to `H^1`.
pub fn f_linear(a: &WordCombo, n: u64, t: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (k, c) in a.index_terms()? {
        let c = c.as_rational().ok_or_else(|| Error::Domain("coefficients must be constant".into()))?;
        acc += c * f_kawashima(&k, n, t)?;
    }
    Ok(acc)
}

/// `(-1)^{m-1} Z_dia(S(k) (*) y^m)`, the `t^m` coefficient of `G_N(k; t)`.
pub fn g_series_coefficient(k: &Index, n: u64, m: u32) -> Result<Rational> {
    let s = star_sum_word(&k.to_word())?;
    let v = eval_z_dia(&circled(&s, &y_power(m))?, n)?;
    Ok(if m % 2 == 1 { v } else { -v })
}

fn indices_up_to(max_weight: u32, class: Option<IndexClass>) -> Vec<Index> {
    let mut out = Vec::new();
    for wt in 1..=max_weight {
        match class {
            Some(c) => out.extend(Index::enumerate(wt, c).unwrap_or_default()),
            None => {
                for d in 1..=wt as usize {
                    out.extend(Index::all_of(wt, d));
                }
            }
        }
    }
    out
}

fn y_words_up_to(max_weight: u32) -> Vec<Word> {
    indices_up_to(max_weight, None).iter().map(Index::to_word).collect()
}

/// Enumerates the cases of a suite.
pub fn cases(suite: Suite, b: &Bounds, ex: &mut Expander) -> Result<Vec<Case>> {
    let w = b.max_weight;
    let adm = || indices_up_to(w, Some(IndexClass::Admissible));
    let all = || indices_up_to(w, None);
    let short = || all().into_iter().filter(|k| k.depth() <= 2).collect::<Vec<_>>();
    let mut out = Vec::new();
    match suite {
        Suite::Central => out.extend(adm().into_iter().map(Case::Central)),
        Suite::Msw => out.extend(all().into_iter().map(Case::Msw)),
        Suite::TwoRow => {
            let cap = w.min(3);
            for d in 1..=2usize {
                let rows: Vec<Index> = all().into_iter().filter(|k| k.depth() == d && k.entries().iter().all(|&e| e <= cap)).collect();
                for l in &rows {
                    for k in &rows {
                        out.push(Case::TwoRow(l.clone(), k.clone()));
                    }
                }
            }
        }
        Suite::DiaDuality => out.extend(adm().into_iter().map(Case::DiaDuality)),
        Suite::DiaFlat => out.extend(adm().into_iter().map(Case::DiaFlat)),
        Suite::Star => out.extend(adm().into_iter().map(Case::Star)),
        Suite::Harmonic => {
            let ge2 = indices_up_to(w.saturating_sub(1), Some(IndexClass::Ge2));
            for k in adm() {
                for l in &ge2 {
                    out.push(Case::Harmonic(k.to_word(), l.to_word()));
                }
            }
        }
        Suite::Difference => {
            for wt in 2..=w {
                out.extend(Composition::all_of_weight(wt).into_iter().map(Case::Difference));
            }
        }
        Suite::Kawashima => {
            let ws = y_words_up_to(w);
            for w1 in &ws {
                for w2 in &ws {
                    for m in 1..=b.max_m {
                        out.push(Case::Kawashima(w1.clone(), w2.clone(), m));
                    }
                }
            }
        }
        Suite::FHarmonic => {
            let ks = all();
            for (i, k) in ks.iter().enumerate() {
                for l in &ks[i..] {
                    out.push(Case::FHarmonic(k.clone(), l.clone()));
                }
            }
        }
        Suite::FG => out.extend(all().into_iter().map(Case::FG)),
        Suite::GSeries => out.extend(all().into_iter().map(Case::GSeries)),
        Suite::Boundary => out.extend(short().into_iter().map(Case::Boundary)),
        Suite::Transport => {
            let ks = short();
            for k in &ks {
                for l in &ks {
                    out.push(Case::Transport(k.clone(), l.clone()));
                }
            }
        }
        Suite::Relation(f) => {
            for inst in relation_instances(f, w, ex)? {
                out.push(Case::Relation(inst));
            }
        }
    }
    Ok(out)
}

/// All instances of a relation family of weight `<= max_weight`.
pub fn relation_instances(f: Family, max_weight: u32, ex: &mut Expander) -> Result<Vec<RelationInstance>> {
    let w = max_weight;
    let mut out = Vec::new();
    match f {
        Family::KanekoSakata => {
            for a in 1..w {
                for b in 1..=w - a {
                    out.push(kaneko_sakata(a, b)?);
                }
            }
        }
        Family::MuraharaSakata => {
            for a in 1..w {
                for bl in indices_up_to(w - a, None) {
                    if bl.depth() <= a as usize {
                        out.push(murahara_sakata(a, &bl)?);
                    }
                }
            }
        }
        Family::Drop1 => {
            for wt in 2..=w {
                for word in admissible_words(wt) {
                    out.push(drop1(ex, &word)?);
                }
            }
        }
        Family::LinKaw => {
            let ws = y_words_up_to(w.saturating_sub(2));
            for (i, w1) in ws.iter().enumerate() {
                for w2 in &ws[i..] {
                    if w1.len() + w2.len() < w as usize {
                        out.push(linkaw(w1, w2)?);
                    }
                }
            }
        }
        Family::LinKawStar => {
            for k in 3..=w {
                for t in crate::lab::explorer::triples(k) {
                    out.push(linkaw_star(&t.w1, &t.w2, &t.w3)?);
                }
            }
        }
        Family::Duality => {
            for k in indices_up_to(w, Some(IndexClass::Admissible)) {
                out.push(duality(&k)?);
            }
        }
    }
    Ok(out)
}

impl Case {
    pub fn suite(&self) -> Suite {
        match self {
            Case::Central(_) => Suite::Central,
            Case::Msw(_) => Suite::Msw,
            Case::TwoRow(..) => Suite::TwoRow,
            Case::DiaDuality(_) => Suite::DiaDuality,
            Case::DiaFlat(_) => Suite::DiaFlat,
            Case::Star(_) => Suite::Star,
            Case::Harmonic(..) => Suite::Harmonic,
            Case::Difference(_) => Suite::Difference,
            Case::Kawashima(..) => Suite::Kawashima,
            Case::FHarmonic(..) => Suite::FHarmonic,
            Case::FG(_) => Suite::FG,
            Case::GSeries(_) => Suite::GSeries,
            Case::Boundary(_) => Suite::Boundary,
            Case::Transport(..) => Suite::Transport,
            Case::Relation(r) => Suite::Relation(r.family),
        }
    }

    /// Named parameters describing the case.
    pub fn params(&self) -> Vec<(&'static str, Param)> {
        let i = |k: &Index| Param::Index(k.clone());
        let wd = |w: &Word| Param::Word(w.clone());
        match self {
            Case::Central(k)
            | Case::Msw(k)
            | Case::DiaDuality(k)
            | Case::DiaFlat(k)
            | Case::Star(k)
            | Case::FG(k)
            | Case::GSeries(k)
            | Case::Boundary(k) => vec![("k", i(k))],
            Case::TwoRow(l, k) => vec![("l", i(l)), ("k", i(k))],
            Case::Harmonic(a, b) => vec![("w1", wd(a)), ("w2", wd(b))],
            Case::Difference(c) => vec![("c", Param::Index(Index::from_slice(c.entries())))],
            Case::Kawashima(a, b, m) => vec![("w1", wd(a)), ("w2", wd(b)), ("m", Param::Nat((*m).into()))],
            Case::FHarmonic(k, l) | Case::Transport(k, l) => vec![("k", i(k)), ("l", i(l))],
            Case::Relation(r) => r.params.clone(),
        }
    }

    /// Runs every check of the case within `b`.
    pub fn run(&self, b: &Bounds, ex: &mut Expander) -> Vec<Outcome> {
        let suite = self.suite();
        let lo = if matches!(suite, Suite::Boundary | Suite::Transport) { 2 } else { 1 };
        let ns = lo..=b.n_max;
        let mut out = Vec::new();
        match self {
            Case::Relation(r) => {
                for c in verify(&r.combo, Mode::NormalForm, ex).checks.into_iter().chain(
                    verify(&r.combo, Mode::DiaEval { n_max: b.n_max }, ex).checks,
                ) {
                    out.push(Outcome { n: c.n, t: None, ok: c.ok, detail: c.witness });
                }
            }
            Case::Central(k) => match ex.expand_index(k) {
                Ok(e) => {
                    let combo = e.to_combo();
                    for n in ns {
                        out.push(Outcome::from_eq(n, None, zeta_dia(k, n), eval_z_dia(&combo, n)));
                    }
                }
                Err(e) => out.push(Outcome { n: None, t: None, ok: false, detail: Some(e.to_string()) }),
            },
            Case::Kawashima(w1, w2, m) => match KawashimaCase::new(w1, w2, *m) {
                Ok(case) => {
                    for n in ns {
                        out.push(Outcome::from_bool(n, case.holds_at(n)));
                    }
                }
                Err(e) => out.push(Outcome { n: None, t: None, ok: false, detail: Some(e.to_string()) }),
            },
            Case::GSeries(k) => {
                for n in ns {
                    let series = g_series(k, n, b.max_m as usize);
                    for m in 1..=b.max_m {
                        let lhs = series.as_ref().map(|s| s.coeff(m as usize).clone()).map_err(Clone::clone);
                        out.push(Outcome::from_eq(n, None, lhs, g_series_coefficient(k, n, m)));
                    }
                }
            }
            _ if suite.uses_t() => {
                for n in ns {
                    for t in &b.t_samples {
                        for (l, r) in self.t_sides(n, t) {
                            out.push(Outcome::from_eq(n, Some(t), l, r));
                        }
                    }
                }
            }
            _ => {
                for n in ns {
                    out.push(self.plain_check(n));
                }
            }
        }
        out
    }

    fn plain_check(&self, n: u64) -> Outcome {
        match self {
            Case::Msw(k) => Outcome::from_eq(n, None, Ok(zeta_n(k, n)), Ok(zeta_flat(k, n))),
            Case::TwoRow(l, k) => Outcome::from_eq(n, None, zeta_tworow(l, k, n), zeta_flat_tworow(l, k, n)),
            Case::DiaDuality(k) => Outcome::from_eq(n, None, zeta_dia(k, n), k.mzv_dual().and_then(|d| zeta_dia(&d, n))),
            Case::DiaFlat(k) => Outcome::from_eq(n, None, zeta_dia(k, n), zeta_dia_flat(k, n)),
            Case::Star(k) => Outcome::from_bool(n, zeta_dia_star(k, n).map(|_| true)),
            Case::Harmonic(a, b) => {
                let (wa, wb) = (WordCombo::from_word(a.clone()), WordCombo::from_word(b.clone()));
                let lhs = eval_z_dia(&wa, n).and_then(|x| Ok(x * eval_z_dia(&wb, n)?));
                let rhs = crate::algebra::harmonic(&wa, &wb).and_then(|p| eval_z_dia(&p, n));
                Outcome::from_eq(n, None, lhs, rhs)
            }
            Case::Difference(c) => {
                let h = h_n(c, n);
                let ok = difference_check(c, n).map(|d| d && h == h_via_f(c, n) && h == h_via_g(c, n));
                Outcome::from_bool(n, ok)
            }
            _ => Outcome { n: Some(n), t: None, ok: false, detail: Some("not a plain check".into()) },
        }
    }

    fn t_sides(&self, n: u64, t: &Rational) -> Vec<(Result<Rational>, Result<Rational>)> {
        let flag = SecondFlag::First;
        match self {
            Case::FHarmonic(k, l) => {
                let lhs = f_kawashima(k, n, t).and_then(|a| Ok(a * f_kawashima(l, n, t)?));
                let rhs = star_harmonic(&WordCombo::from_index(k), &WordCombo::from_index(l))
                    .and_then(|p| f_linear(&p, n, t));
                vec![(lhs, rhs)]
            }
            Case::FG(k) => vec![(f_kawashima(k, n, t), k.hoffman_dual().and_then(|d| g_kawashima(&d, n, t)))],
            Case::Boundary(k) => vec![
                (connected_sum_up(k, n, t), g_kawashima(k, n, t)),
                (connected_sum(&Index::from_slice(&[1]), k, n, t, flag), f_kawashima(k, n, t)),
            ],
            Case::Transport(k, l) => vec![
                (connected_sum(&up(k), l, n, t, flag), connected_sum(k, &prepend_one(l), n, t, flag)),
                (connected_sum(&append_one(k), l, n, t, flag), connected_sum(k, &up_front(l), n, t, flag)),
                (connected_sum_up(k, n, t), connected_sum(k, &Index::from_slice(&[1]), n, t, flag)),
            ],
            _ => Vec::new(),
        }
    }
}

/// The failure of the unrestricted harmonic product for `zeta_dia(1,2)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiShuffleControl {
    pub square: Rational,
    /// `Z_dia((1,2) * (1,2))`.
    pub product: Rational,
    /// `sum_{0<n1<=n2<n3<N} 1/((N-n1)^2 n2^2 n3^2)`
    pub triple_correction: Rational,
    /// `sum_{0<n1<=n2<N} 1/((N-n1)^2 n2^4)`
    pub double_correction: Rational,
}

impl QuasiShuffleControl {
    /// True when `square = product - 2 triple - double`.
    pub fn balanced(&self) -> bool {
        let two = Rational::from_integer(2.into());
        self.square == &self.product - &(&two * &self.triple_correction) - &self.double_correction
    }
}

pub fn quasi_shuffle_control(n: u64) -> Result<QuasiShuffleControl> {
    let k = Index::from_slice(&[1, 2]);
    let v = zeta_dia(&k, n)?;
    let w = WordCombo::from_index(&k);
    let product = eval_z_dia(&crate::algebra::harmonic(&w, &w)?, n)?;
    let nn = n as i64;
    let hi = nn - 1;
    let refl = move |m: i64| Ok(crate::algebra::rat(1, (nn - m) * (nn - m)));
    let pow = |e: u32| move |m: i64| Ok(crate::algebra::rat(1, m.pow(e)));
    let triple = Chain::start(Node::new(1, hi).alt(refl))
        .then(|_, _| Rel::Le, Node::new(1, hi).alt(pow(2)))
        .then(|_, _| Rel::Lt, Node::new(1, hi).alt(pow(2)))
        .sum(&Rational::zero())?;
    let double = Chain::start(Node::new(1, hi).alt(refl))
        .then(|_, _| Rel::Le, Node::new(1, hi).alt(pow(4)))
        .sum(&Rational::zero())?;
    Ok(QuasiShuffleControl { square: &v * &v, product, triple_correction: triple, double_correction: double })
}

/// The quasi-shuffle expansion of `(1,2) * (1,2)` written out term by term,
/// for comparison with [`crate::algebra::harmonic`].
pub fn square_expansion() -> WordCombo {
    let terms: [(&[u32], i64); 6] =
        [(&[1, 2, 1, 2], 2), (&[1, 1, 2, 2], 4), (&[1, 1, 4], 2), (&[1, 3, 2], 2), (&[2, 2, 2], 2), (&[2, 4], 1)];
    let mut out = WordCombo::zero();
    for (k, c) in terms {
        out.add_term(Index::from_slice(k).to_word(), &Coefficient::from_int(c));
    }
    out
}
