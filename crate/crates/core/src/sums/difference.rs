//! The functions `f_N`, `g_N = f_{N+1}` and `h_N` on compositions and the
//! difference equation satisfied by `f_N`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};
use crate::index::{Composition, Pairing};
use crate::sums::chain::{Chain, Node, Rel};
use crate::sums::mzv::zeta_dia;

/// `f_N(c)`: the modified sum of the index decoded from `c`; `f_N(()) = 1`.
pub fn f_n(c: &Composition, n: u64) -> Rational {
    if c.is_empty() {
        return Rational::one();
    }
    zeta_dia(&c.to_index(), n).expect("decoded compositions are admissible")
}

/// `g_N(c) = f_{N+1}(c)`.
pub fn g_n(c: &Composition, n: u64) -> Rational {
    f_n(c, n + 1)
}

/// `h_N(c)`, by its own lattice sum over blocks of `c_i` weakly increasing
/// variables in `[0, N)`, with a virtual block at 0 in front.
pub fn h_n(c: &Composition, n: u64) -> Rational {
    if c.is_empty() {
        return Rational::one();
    }
    let nn = n as i64;
    let hi = nn - 1;
    let inv_n = rat(1, nn);
    let mut chain = Chain::start(Node::new(0, 0).alt(|_| Ok(Rational::one())));
    for (i, &ci) in c.entries().iter().enumerate() {
        let odd = i % 2 == 0;
        for j in 0..ci {
            let plain = move |m: i64| Ok(if odd { rat(1, nn - m) } else { rat(1, m) });
            let mut node = Node::new(0, hi).alt(plain);
            if ci == 1 {
                let w = inv_n.clone();
                node = node.alt(move |_| Ok(w.clone()));
            }
            chain = if j == 0 {
                // alternative 1 marks the block as removed: equal to its predecessor
                chain.then(|_, b| if b == 1 { Rel::Eq } else { Rel::Lt }, node)
            } else {
                chain.then(|_, _| Rel::Le, node)
            };
        }
    }
    chain.sum(&Rational::zero()).expect("no poles")
}

/// `(f_N(c), g_N(c), h_N(c))` for a nonempty composition.
pub fn f_g_h(c: &Composition, n: u64) -> Result<(Rational, Rational, Rational)> {
    if c.is_empty() {
        return Err(Error::Domain("f, g, h need a nonempty composition".into()));
    }
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    Ok((f_n(c, n), g_n(c, n), h_n(c, n)))
}

fn signed_power(neg: bool, n: u64, e: usize) -> Rational {
    let mut d = BigInt::one();
    for _ in 0..e {
        d *= n;
    }
    let r = Rational::new(BigInt::one(), d);
    if neg {
        -r
    } else {
        r
    }
}

/// `sum_{(A,B)} sign(B) / N^{#A+#B} * value(c_{(-A)} - delta_B)` over the
/// families of `pairing` with `#A + #B >= min_size`.
fn family_sum(
    c: &Composition,
    n: u64,
    pairing: Pairing,
    min_size: usize,
    negate_when_b_even: bool,
    value: &mut dyn FnMut(&Composition) -> Rational,
) -> Rational {
    let mut total = Rational::zero();
    for (a, b) in c.subset_families(pairing) {
        let size = a.len() + b.len();
        if size < min_size {
            continue;
        }
        let sub = c.remove_and_subtract(a, b).expect("legal subset pair");
        let neg = (b.len() % 2 == 0) == negate_when_b_even;
        total += signed_power(neg, n, size) * value(&sub);
    }
    total
}

/// `h_N(c)` expressed through `f_N` over odd-even removals.
pub fn h_via_f(c: &Composition, n: u64) -> Rational {
    family_sum(c, n, Pairing::OddEven, 0, false, &mut |d| f_n(d, n))
}

/// `h_N(c)` expressed through `g_N` over even-odd removals.
pub fn h_via_g(c: &Composition, n: u64) -> Rational {
    family_sum(c, n, Pairing::EvenOdd, 0, false, &mut |d| g_n(d, n))
}

fn delta_f(c: &Composition, n: u64) -> Rational {
    if c.is_empty() {
        Rational::zero()
    } else {
        g_n(c, n) - f_n(c, n)
    }
}

/// Both sides of the difference equation for `f_N(c)`.
pub fn difference_sides(c: &Composition, n: u64) -> (Rational, Rational) {
    let lhs = delta_f(c, n);
    let mut rhs = family_sum(c, n, Pairing::EvenOdd, 1, true, &mut |d| delta_f(d, n));
    rhs += family_sum(c, n, Pairing::EvenOdd, 2, true, &mut |d| f_n(d, n));
    rhs += family_sum(c, n, Pairing::OddEven, 2, false, &mut |d| f_n(d, n));
    (lhs, rhs)
}

/// True when the difference equation holds exactly at `(c, N)`.
pub fn difference_check(c: &Composition, n: u64) -> Result<bool> {
    if c.is_empty() || n == 0 {
        return Err(Error::Domain("difference check needs a nonempty composition and N >= 1".into()));
    }
    let (l, r) = difference_sides(c, n);
    Ok(l == r)
}

/// All three identities for compositions of weight `<= max_weight`, returning
/// the failing `(composition, N)` pairs.
pub fn difference_failures(max_weight: u32, n_max: u64) -> Vec<(Composition, u64)> {
    let mut bad = Vec::new();
    for wt in 2..=max_weight {
        for c in Composition::all_of_weight(wt) {
            for n in 1..=n_max {
                let h = h_n(&c, n);
                let ok = difference_check(&c, n).unwrap_or(false) && h == h_via_f(&c, n) && h == h_via_g(&c, n);
                if !ok {
                    bad.push((c.clone(), n));
                }
            }
        }
    }
    bad
}
