//! Truncated multiple harmonic sums and their modified, star and flat forms.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{rat, Rational, WordCombo};
use crate::error::{Error, Result};
use crate::index::Index;
use crate::sums::chain::{Chain, Node, Rel};

fn recip_pow(n: i64, k: u32) -> Rational {
    let mut d = num_bigint::BigInt::one();
    for _ in 0..k {
        d *= n;
    }
    Rational::new(num_bigint::BigInt::one(), d)
}

fn last_value(n: u64) -> i64 {
    n as i64 - 1
}

/// `zeta_N(k) = sum_{0<n_1<...<n_r<N} prod 1/n_i^{k_i}`; the empty index gives 1.
pub fn zeta_n(k: &Index, n: u64) -> Rational {
    let e = k.entries();
    if e.is_empty() {
        return Rational::one();
    }
    let hi = last_value(n);
    let node = |ki: u32| Node::new(1, hi).alt(move |m| Ok(recip_pow(m, ki)));
    let mut chain = Chain::start(node(e[0]));
    for &ki in &e[1..] {
        chain = chain.then(|_, _| Rel::Lt, node(ki));
    }
    chain.sum(&Rational::zero()).expect("no poles")
}

/// Alternatives of a position: 0 is the plain factor `1/n^k`, 1 (only for
/// `k = 1`) is the modified factor `1/(N-n)`.
fn dia_node<'a>(ki: u32, n: u64, allow_mod: bool) -> Node<'a, Rational> {
    let nn = n as i64;
    let node = Node::new(1, last_value(n)).alt(move |m| Ok(recip_pow(m, ki)));
    if allow_mod && ki == 1 {
        node.alt(move |m| Ok(rat(1, nn - m)))
    } else {
        node
    }
}

/// The modified sum: a sum over subsets `A` of the positions with entry 1 of
/// sums with `<=` after positions in `A`, `<` elsewhere, and factors
/// `1/(N-n_i)` on `A`, `1/n_i^{k_i}` off `A`.
pub fn zeta_dia(k: &Index, n: u64) -> Result<Rational> {
    k.require_admissible()?;
    Ok(zeta_dia_unchecked(k, n))
}

fn zeta_dia_unchecked(k: &Index, n: u64) -> Rational {
    let e = k.entries();
    let mut chain = Chain::start(dia_node(e[0], n, true));
    for &ki in &e[1..] {
        chain = chain.then(|a, _| if a == 1 { Rel::Le } else { Rel::Lt }, dia_node(ki, n, true));
    }
    chain.sum(&Rational::zero()).expect("no poles")
}

/// The order relation of the star region `S*(A)` between positions `i` and `i+1`.
pub(crate) fn star_rel(a: usize, b: usize) -> Rel {
    if a == 1 || b == 0 {
        Rel::Le
    } else {
        Rel::Lt
    }
}

/// The star form as a sum of modified sums over all coarsenings.
pub fn zeta_dia_star_by_coarsening(k: &Index, n: u64) -> Result<Rational> {
    k.require_admissible()?;
    Ok(k.coarsenings().iter().map(|l| zeta_dia_unchecked(l, n)).sum())
}

/// The star form as a single lattice sum over the regions `S*(A)`.
pub fn zeta_dia_star_closed(k: &Index, n: u64) -> Result<Rational> {
    k.require_admissible()?;
    let e = k.entries();
    let mut chain = Chain::start(dia_node(e[0], n, true));
    for &ki in &e[1..] {
        chain = chain.then(star_rel, dia_node(ki, n, true));
    }
    chain.sum(&Rational::zero())
}

/// The star form, computed both ways; disagreement is reported as an error.
pub fn zeta_dia_star(k: &Index, n: u64) -> Result<Rational> {
    let a = zeta_dia_star_by_coarsening(k, n)?;
    let b = zeta_dia_star_closed(k, n)?;
    if a != b {
        return Err(Error::Mismatch(format!("star forms of {k} at N={n}: {a} vs {b}")));
    }
    Ok(a)
}

/// Builds a chain of blocks; block `i` has `len[i]` variables weakly
/// increasing, `weight(i, j, m)` is the factor of the `j`-th variable, and
/// `boundary(i)` links the last variable of block `i` to block `i+1`.
fn block_chain<'a>(
    lens: &'a [u32],
    n: u64,
    weight: impl Fn(usize, u32, i64) -> Rational + Copy + 'a,
    boundary: impl Fn(usize) -> Rel + Copy + 'a,
) -> Rational {
    let hi = last_value(n);
    let mut chain: Option<Chain<'a, Rational>> = None;
    for (i, &len) in lens.iter().enumerate() {
        for j in 0..len {
            let node = Node::new(1, hi).alt(move |m| Ok(weight(i, j, m)));
            chain = Some(match chain {
                None => Chain::start(node),
                Some(c) if j == 0 => c.then(move |_, _| boundary(i - 1), node),
                Some(c) => c.then(|_, _| Rel::Le, node),
            });
        }
    }
    match chain {
        None => Rational::one(),
        Some(c) => c.sum(&Rational::zero()).expect("no poles"),
    }
}

/// The discrete iterated-integral form
/// `sum prod 1/((N - n_{i,1}) n_{i,2} ... n_{i,k_i})`.
pub fn zeta_flat(k: &Index, n: u64) -> Rational {
    let nn = n as i64;
    block_chain(k.entries(), n, move |_, j, m| if j == 0 { rat(1, nn - m) } else { rat(1, m) }, |_| Rel::Lt)
}

fn require_same_depth(l: &Index, k: &Index) -> Result<()> {
    if l.depth() != k.depth() {
        return Err(Error::Domain(format!("depths of {l} and {k} differ")));
    }
    Ok(())
}

/// The two-row sum with blocks of lengths `l_j`: the first `l_j - 1`
/// variables carry `1/(N - m)`, the last carries `1/m^{k_j}`.
pub fn zeta_tworow(l: &Index, k: &Index, n: u64) -> Result<Rational> {
    require_same_depth(l, k)?;
    let nn = n as i64;
    let le = l.entries();
    let ke = k.entries();
    Ok(block_chain(
        le,
        n,
        move |i, j, m| if j + 1 == le[i] { recip_pow(m, ke[i]) } else { rat(1, nn - m) },
        |_| Rel::Lt,
    ))
}

/// The flat two-row sum with blocks of lengths `k_i`: the first variable
/// carries `1/(N - n)^{l_i}`, the others `1/n`.
pub fn zeta_flat_tworow(l: &Index, k: &Index, n: u64) -> Result<Rational> {
    require_same_depth(l, k)?;
    let nn = n as i64;
    let le = l.entries();
    Ok(block_chain(
        k.entries(),
        n,
        move |i, j, m| if j == 0 { recip_pow(nn - m, le[i]) } else { rat(1, m) },
        |_| Rel::Lt,
    ))
}

/// The flat form of the modified sum: block boundaries after an entry equal
/// to 1 are weak, all others strict.
pub fn zeta_dia_flat(k: &Index, n: u64) -> Result<Rational> {
    k.require_admissible()?;
    let nn = n as i64;
    let e = k.entries();
    Ok(block_chain(
        e,
        n,
        move |_, j, m| if j == 0 { rat(1, nn - m) } else { rat(1, m) },
        move |i| if e[i] == 1 { Rel::Le } else { Rel::Lt },
    ))
}

fn constant_coeffs(a: &WordCombo) -> Result<Vec<(Index, Rational)>> {
    a.index_terms()?
        .into_iter()
        .map(|(k, c)| match c.as_rational() {
            Some(r) => Ok((k, r)),
            None => Err(Error::Domain(format!("coefficient {c} depends on t"))),
        })
        .collect()
}

/// `Z^dia_N` extended linearly to `H^0`, with `Z(1) = 1`.
pub fn eval_z_dia(a: &WordCombo, n: u64) -> Result<Rational> {
    a.require_h0()?;
    let mut total = Rational::zero();
    for (k, c) in constant_coeffs(a)? {
        let v = if k.is_empty() { Rational::one() } else { zeta_dia_unchecked(&k, n) };
        total += c * v;
    }
    Ok(total)
}

/// `zeta_N` extended linearly to `H^1`, with `Z(1) = 1`.
pub fn eval_z_h(a: &WordCombo, n: u64) -> Result<Rational> {
    a.require_h1()?;
    let mut total = Rational::zero();
    for (k, c) in constant_coeffs(a)? {
        total += c * zeta_n(&k, n);
    }
    Ok(total)
}

/// Double-precision `zeta_N(k)`, for convergence probes only.
pub fn zeta_float(k: &Index, n: u64) -> Result<f64> {
    k.require_admissible()?;
    let hi = n.saturating_sub(1) as usize;
    // prev[m] = sum over chains of the entries so far ending at value m
    let mut prev: Option<Vec<f64>> = None;
    for &ki in k.entries() {
        let mut next = alloc::vec![0.0; hi + 1];
        let mut below = 0.0;
        for m in 1..=hi {
            let mut p = 1.0;
            for _ in 0..ki {
                p *= m as f64;
            }
            next[m] = match &prev {
                None => 1.0 / p,
                Some(pv) => {
                    let v = below / p;
                    below += pv[m];
                    v
                }
            };
        }
        prev = Some(next);
    }
    Ok(prev.map_or(1.0, |p| p.iter().sum()))
}
