//! Kawashima-type functions `F_N(k; t)` and `G_N(k; t)`, connectors and
//! connected sums, and the parameterized modified sums.
//!
//! Everything is generic over [`Scalar`], so the same code evaluates at a
//! rational point `t` and expands as a truncated power series in `t`.

use alloc::format;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::algebra::{int, Rational};
use crate::error::{Error, Result};
use crate::index::Index;
use crate::sums::chain::{Chain, Node, Rel};
use crate::sums::mzv::star_rel;
use crate::sums::scalar::Scalar;
use crate::sums::series::TruncatedSeries;

fn r(n: i64) -> Rational {
    int(n)
}

/// `1/n^k` for a positive integer `n`.
fn recip_pow<T: Scalar>(like: &T, n: i64, k: u32) -> T {
    let mut d = BigInt::one();
    for _ in 0..k {
        d *= n;
    }
    like.lift(Rational::new(BigInt::one(), d))
}

/// `N - n + t`.
fn shifted<T: Scalar>(t: &T, big_n: i64, n: i64) -> T {
    t.add_rational(&r(big_n - n))
}

/// The rising factorial `(a)_n`.
pub fn rising<T: Scalar>(a: &T, n: u64) -> T {
    let mut acc = a.one_like();
    for j in 0..n {
        acc = acc.mul(&a.add_rational(&r(j as i64)));
    }
    acc
}

/// `binom(t, n) = t (t-1) ... (t-n+1) / n!`.
pub fn binom_t<T: Scalar>(t: &T, n: u64) -> T {
    let mut acc = t.one_like();
    let mut fact = BigInt::one();
    for j in 0..n {
        acc = acc.mul(&t.add_rational(&r(-(j as i64))));
        fact *= j + 1;
    }
    acc.scale(&Rational::new(BigInt::one(), fact))
}

fn require_sample(t: &Rational) -> Result<()> {
    if t.is_integer() {
        return Err(Error::Pole(format!("t = {t} is an integer")));
    }
    Ok(())
}

/// `F_N(k; t)`: the signed sum over all `A` of sums over `S-bar(A)`
/// (`n_{i-1} < n_i` if `i` in `A`, `<=` otherwise) with factors
/// `1/(N - n_i + t)^{k_i}` on `A` and `1/n_i^{k_i}` off `A`.
pub fn f_kawashima_in<T: Scalar>(k: &Index, big_n: u64, t: &T) -> Result<T> {
    let e = k.entries();
    if e.is_empty() {
        return Ok(t.one_like());
    }
    let nn = big_n as i64;
    let node = |ki: u32| {
        Node::new(1, nn - 1)
            .alt(move |m| Ok(recip_pow(t, m, ki)))
            .alt(move |m| Ok(shifted(t, nn, m).pow(ki).inv()?.neg()))
    };
    let mut chain = Chain::start(node(e[0]));
    for &ki in &e[1..] {
        chain = chain.then(|_, b| if b == 1 { Rel::Lt } else { Rel::Le }, node(ki));
    }
    chain.sum(&t.zero_like())
}

/// `F_N(k; t)` at a non-integer rational `t`.
pub fn f_kawashima(k: &Index, big_n: u64, t: &Rational) -> Result<Rational> {
    require_sample(t)?;
    f_kawashima_in(k, big_n, t)
}

/// `(-1)^{n-1} binom(t, n) (1-N)_n / (1-N-t)_n`.
pub fn g_boundary_factor<T: Scalar>(t: &T, big_n: u64, n: u64) -> Result<T> {
    let nn = big_n as i64;
    let poch_n = rising(&t.lift(r(1 - nn)), n);
    let poch_t = rising(&t.neg().add_rational(&r(1 - nn)), n);
    let v = binom_t(t, n).mul(&poch_n).mul(&poch_t.inv()?);
    Ok(if n % 2 == 1 { v } else { v.neg() })
}

/// Nodes of a first block over the star regions: alternative 0 is
/// `1/n^{k_i}`, alternative 1 (entry 1, and `allow_last` for the last
/// position) is `1/(N - n + t)`.
fn star_block<'a, T: Scalar + 'a>(
    e: &'a [u32],
    nn: i64,
    t: &'a T,
    allow_last: bool,
    extra_last: impl Fn(i64) -> Result<T> + Copy + 'a,
) -> Chain<'a, T> {
    let r_len = e.len();
    let node = move |i: usize| {
        let ki = e[i];
        let is_last = i + 1 == r_len;
        let node = Node::new(1, nn - 1).alt(move |m| {
            let w = recip_pow(t, m, ki);
            if is_last {
                Ok(w.mul(&extra_last(m)?))
            } else {
                Ok(w)
            }
        });
        if ki == 1 && (!is_last || allow_last) {
            node.alt(move |m| {
                let w = shifted(t, nn, m).inv()?;
                if is_last {
                    Ok(w.mul(&extra_last(m)?))
                } else {
                    Ok(w)
                }
            })
        } else {
            node
        }
    };
    let mut chain = Chain::start(node(0));
    for i in 1..r_len {
        chain = chain.then(star_rel, node(i));
    }
    chain
}

/// `G_N(k; t)`.
pub fn g_kawashima_in<T: Scalar>(k: &Index, big_n: u64, t: &T) -> Result<T> {
    let e = k.entries();
    if e.is_empty() {
        return Err(Error::Domain("G needs a nonempty index".into()));
    }
    let nn = big_n as i64;
    let chain = star_block(e, nn, t, false, move |m| g_boundary_factor(t, big_n, m as u64));
    chain.sum(&t.zero_like())
}

/// `G_N(k; t)` at a non-integer rational `t`.
pub fn g_kawashima(k: &Index, big_n: u64, t: &Rational) -> Result<Rational> {
    require_sample(t)?;
    g_kawashima_in(k, big_n, t)
}

/// The Taylor expansion of `G_N(k; t)` at `t = 0` up to `t^order`.
pub fn g_series(k: &Index, big_n: u64, order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::Domain("series order must be at least 1".into()));
    }
    g_kawashima_in(k, big_n, &TruncatedSeries::var(order))
}

/// Which of the two arguments of a connector is reflected to `N - . + t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connector {
    /// `C(n, m)`
    Direct,
    /// `C(N - n + t, m)`
    ReflectFirst,
    /// `C(n, N - m + t)`
    ReflectSecond,
    /// `C(N - n + t, N - m + t)`
    ReflectBoth,
}

impl Connector {
    pub fn from_flags(first: bool, second: bool) -> Self {
        match (first, second) {
            (false, false) => Connector::Direct,
            (true, false) => Connector::ReflectFirst,
            (false, true) => Connector::ReflectSecond,
            (true, true) => Connector::ReflectBoth,
        }
    }
}

/// `C(n, m) = (-1)^{n-1} n binom(m, n) (1-N-t)_{n+m} / ((1-N-t)_n (1-N-t)_m)`.
fn connector_direct<T: Scalar>(n: i64, m: i64, big_n: u64, t: &T) -> Result<T> {
    if m < n || m <= 0 {
        return Ok(t.zero_like());
    }
    let a = t.neg().add_rational(&r(1 - big_n as i64));
    let coef = Rational::from_integer(binomial(BigInt::from(m), BigInt::from(n)) * n);
    let v = rising(&a, (n + m) as u64)
        .mul(&rising(&a, n as u64).inv()?)
        .mul(&rising(&a, m as u64).inv()?)
        .scale(&coef);
    Ok(if n % 2 == 1 { v } else { v.neg() })
}

/// The four connectors at positive integers `n, m < N`.
pub fn connector_in<T: Scalar>(kind: Connector, n: i64, m: i64, big_n: u64, t: &T) -> Result<T> {
    let nn = big_n as i64;
    match kind {
        Connector::Direct => connector_direct(n, m, big_n, t),
        Connector::ReflectFirst => {
            let c = connector_direct(n, m, big_n, t)?;
            Ok(c.mul(&shifted(t, nn, n)).mul(&shifted(t, nn - m, n).inv()?))
        }
        Connector::ReflectSecond => connector_direct(n, m - 1, big_n, t),
        Connector::ReflectBoth => {
            let c = connector_direct(n, m, big_n, t)?;
            let num = shifted(t, nn, n).mul(&shifted(t, nn, m));
            let den = shifted(t, nn - m, n).scale(&r(m));
            Ok(c.mul(&num).mul(&den.inv()?))
        }
    }
}

/// A connector at a non-integer rational `t`.
pub fn connector(kind: Connector, n: i64, m: i64, big_n: u64, t: &Rational) -> Result<Rational> {
    require_sample(t)?;
    if n < 1 || m < 1 || n >= big_n as i64 || m >= big_n as i64 {
        return Err(Error::Domain(format!("connector arguments {n}, {m} outside [1, {})", big_n)));
    }
    connector_in(kind, n, m, big_n, t)
}

/// Which position of the second block selects the reflection of the
/// connector's second argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SecondFlag {
    /// The first position, whose variable is the connector's argument.
    #[default]
    First,
    /// The last position.
    Last,
}

fn connected_chain<'a, T: Scalar + 'a>(
    k: &'a [u32],
    l: &'a [u32],
    big_n: u64,
    t: &'a T,
    flag: SecondFlag,
    last_alt: Option<usize>,
) -> Chain<'a, T> {
    let nn = big_n as i64;
    let first = star_block(k, nn, t, true, |_| Ok(t.one_like()));
    let s = l.len();
    let node = move |j: usize| {
        let lj = l[j];
        let keep = move |alt: usize| last_alt.is_none_or(|a| j + 1 < s || a == alt);
        Node::new(1, nn - 1)
            .alt(move |m| if keep(0) { Ok(recip_pow(t, m, lj)) } else { Ok(t.zero_like()) })
            .alt(move |m| {
                if keep(1) {
                    Ok(shifted(t, nn, m).pow(lj).inv()?.neg())
                } else {
                    Ok(t.zero_like())
                }
            })
    };
    let kernel = move |a: usize, n: i64, b: usize, m: i64| {
        let second = match flag {
            SecondFlag::First => b == 1,
            SecondFlag::Last => last_alt == Some(1),
        };
        connector_in(Connector::from_flags(a == 1, second), n, m, big_n, t).map(Some)
    };
    let mut chain = first.then_kernel(kernel, node(0));
    for j in 1..s {
        chain = chain.then(|_, b| if b == 1 { Rel::Lt } else { Rel::Le }, node(j));
    }
    chain
}

/// The connected sum `Z_{N,t}(k; l)` for nonempty `k`, `l`.
pub fn connected_sum_in<T: Scalar>(k: &Index, l: &Index, big_n: u64, t: &T, flag: SecondFlag) -> Result<T> {
    if k.is_empty() || l.is_empty() {
        return Err(Error::Domain("connected sums need nonempty indices".into()));
    }
    let (ke, le) = (k.entries(), l.entries());
    match flag {
        SecondFlag::First => connected_chain(ke, le, big_n, t, flag, None).sum(&t.zero_like()),
        SecondFlag::Last => {
            let a = connected_chain(ke, le, big_n, t, flag, Some(0)).sum(&t.zero_like())?;
            let b = connected_chain(ke, le, big_n, t, flag, Some(1)).sum(&t.zero_like())?;
            Ok(a.add(&b))
        }
    }
}

/// `Z_{N,t}(k; l)` at a non-integer rational `t`.
pub fn connected_sum(k: &Index, l: &Index, big_n: u64, t: &Rational, flag: SecondFlag) -> Result<Rational> {
    require_sample(t)?;
    connected_sum_in(k, l, big_n, t, flag)
}

/// `Z_{N,t}(k_up; ())` where `k_up` raises the last entry of `k` by one.
pub fn connected_sum_up(k: &Index, big_n: u64, t: &Rational) -> Result<Rational> {
    require_sample(t)?;
    let e = k.entries();
    if e.is_empty() {
        return Err(Error::Domain("connected sums need a nonempty index".into()));
    }
    let nn = big_n as i64;
    let extra = move |m: i64| -> Result<Rational> {
        let c = connector_in(Connector::Direct, m, nn - 1, big_n, t)?;
        Ok(c * Rational::new(BigInt::one(), BigInt::from(m)))
    };
    star_block(e, nn, t, false, extra).sum(&Rational::zero())
}

/// `zeta^dia_{n0,N}(k; z)`: variables in `(n0, N]` with `n_{r+1} = N`, `<=`
/// after positions in `A`, `<` elsewhere, factors `1/(z - n_i)` on `A`.
pub fn zeta_dia_param(k: &Index, n0: u64, big_n: u64, z: &Rational) -> Result<Rational> {
    if n0 >= big_n {
        return Err(Error::Domain(format!("need n0 < N, got n0 = {n0}, N = {big_n}")));
    }
    let e = k.entries();
    if e.is_empty() {
        return Ok(Rational::one());
    }
    let (lo, hi) = (n0 as i64 + 1, big_n as i64);
    let node = |ki: u32| {
        let n = Node::new(lo, hi).alt(move |m| Ok(recip_pow(z, m, ki)));
        if ki == 1 {
            n.alt(move |m| (z - r(m)).inv())
        } else {
            n
        }
    };
    let rel = |a: usize, _| if a == 1 { Rel::Le } else { Rel::Lt };
    let mut chain = Chain::start(node(e[0]));
    for &ki in &e[1..] {
        chain = chain.then(rel, node(ki));
    }
    chain = chain.then(rel, Node::new(hi, hi).alt(|_| Ok(Rational::one())));
    chain.sum(&Rational::zero())
}

/// `prod_{n0<j<N} (1 + t/j) prod_{n0<j<=N} (1 - t/(z-j))^{-1}` up to `t^order`.
pub fn ones_generating_series(n0: u64, big_n: u64, z: &Rational, order: usize) -> Result<TruncatedSeries> {
    let t = TruncatedSeries::var(order);
    let mut acc = t.one_like();
    for j in n0 + 1..big_n {
        acc = acc.mul(&t.scale(&Rational::new(BigInt::one(), BigInt::from(j))).add_rational(&r(1)));
    }
    for j in n0 + 1..=big_n {
        let d = z - r(j as i64);
        if d.is_zero() {
            return Err(Error::Pole(format!("z = {z} hits j = {j}")));
        }
        let factor = t.scale(&-d.recip()).add_rational(&r(1));
        acc = acc.mul(&factor.inv()?);
    }
    Ok(acc)
}
