//! Brute-force oracles for the finite sums. Every oracle enumerates all
//! weakly increasing tuples and tests the defining constraints directly.

use mzv_core::algebra::{int, rat, Rational};
use mzv_core::sums::kawashima::{
    connected_sum, connected_sum_up, f_kawashima, g_kawashima, zeta_dia_param, SecondFlag,
};
use mzv_core::sums::{difference, mzv};
use mzv_core::{Composition, Index};
use num_traits::{One, Zero};

fn nondecreasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn go(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            go(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    go(len, lo, hi, &mut cur, &mut out);
    out
}

fn subsets(positions: &[usize]) -> Vec<Vec<usize>> {
    (0..1usize << positions.len())
        .map(|m| positions.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p).collect())
        .collect()
}

fn pw(x: &Rational, k: u32) -> Rational {
    let mut r = Rational::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

fn inv_pow(n: i64, k: u32) -> Rational {
    pw(&int(n), k).recip()
}

fn ix(v: &[u32]) -> Index {
    Index::from_slice(v)
}

fn all_indices(max_weight: u32) -> Vec<Index> {
    let mut out = vec![];
    for w in 1..=max_weight {
        for d in 1..=w as usize {
            out.extend(Index::all_of(w, d));
        }
    }
    out
}

fn ones(k: &Index) -> Vec<usize> {
    k.entries().iter().enumerate().filter(|(_, &e)| e == 1).map(|(i, _)| i).collect()
}

fn brute_zeta_n(k: &Index, n: i64) -> Rational {
    let e = k.entries();
    let mut s = Rational::zero();
    for v in nondecreasing(e.len(), 1, n - 1) {
        if v.windows(2).all(|w| w[0] < w[1]) {
            s += e.iter().zip(&v).map(|(&ki, &x)| inv_pow(x, ki)).product::<Rational>();
        }
    }
    s
}

fn brute_zeta_dia(k: &Index, n: i64) -> Rational {
    let e = k.entries();
    let mut s = Rational::zero();
    for a in subsets(&ones(k)) {
        for v in nondecreasing(e.len(), 1, n - 1) {
            let ok = (0..e.len().saturating_sub(1)).all(|i| if a.contains(&i) { v[i] <= v[i + 1] } else { v[i] < v[i + 1] });
            if ok {
                s += (0..e.len())
                    .map(|i| if a.contains(&i) { rat(1, n - v[i]) } else { inv_pow(v[i], e[i]) })
                    .product::<Rational>();
            }
        }
    }
    s
}

fn star_ok(a: &[usize], v: &[i64]) -> bool {
    (0..v.len().saturating_sub(1)).all(|i| {
        if !a.contains(&i) && a.contains(&(i + 1)) {
            v[i] < v[i + 1]
        } else {
            v[i] <= v[i + 1]
        }
    })
}

fn bar_ok(b: &[usize], v: &[i64]) -> bool {
    (1..v.len()).all(|i| if b.contains(&i) { v[i - 1] < v[i] } else { v[i - 1] <= v[i] })
}

/// Flat sums: block `i` has `lens[i]` weakly increasing variables; the first
/// carries `1/(N-n)^{first_pow[i]}`, later ones `1/n`, except that the last
/// carries `1/n^{last_pow[i]}` when `last_pow` is given.
fn brute_blocks(lens: &[u32], n: i64, weight: impl Fn(usize, usize, i64) -> Rational, weak: impl Fn(usize) -> bool) -> Rational {
    let total: usize = lens.iter().map(|&l| l as usize).sum();
    let mut starts = vec![];
    let mut acc = 0;
    for &l in lens {
        starts.push(acc);
        acc += l as usize;
    }
    let mut s = Rational::zero();
    for v in nondecreasing(total, 1, n - 1) {
        let ok = (1..lens.len()).all(|i| {
            let (last, first) = (v[starts[i] - 1], v[starts[i]]);
            if weak(i - 1) {
                last <= first
            } else {
                last < first
            }
        });
        if ok {
            let mut p = Rational::one();
            for (i, &l) in lens.iter().enumerate() {
                for j in 0..l as usize {
                    p *= weight(i, j, v[starts[i] + j]);
                }
            }
            s += p;
        }
    }
    s
}

#[test]
fn truncated_sums_match_brute_force() {
    for k in all_indices(5) {
        for n in 1..=7u64 {
            assert_eq!(mzv::zeta_n(&k, n), brute_zeta_n(&k, n as i64), "{k} N={n}");
            let nn = n as i64;
            let flat = brute_blocks(k.entries(), nn, |_, j, x| if j == 0 { rat(1, nn - x) } else { rat(1, x) }, |_| false);
            assert_eq!(mzv::zeta_flat(&k, n), flat, "{k} N={n}");
            if k.is_admissible() {
                assert_eq!(mzv::zeta_dia(&k, n).unwrap(), brute_zeta_dia(&k, nn), "{k} N={n}");
                let e = k.entries();
                let dflat = brute_blocks(e, nn, |_, j, x| if j == 0 { rat(1, nn - x) } else { rat(1, x) }, |i| e[i] == 1);
                assert_eq!(mzv::zeta_dia_flat(&k, n).unwrap(), dflat, "{k} N={n}");
                let mut star = Rational::zero();
                for a in subsets(&ones(&k)) {
                    for v in nondecreasing(e.len(), 1, nn - 1) {
                        if star_ok(&a, &v) {
                            star += (0..e.len())
                                .map(|i| if a.contains(&i) { rat(1, nn - v[i]) } else { inv_pow(v[i], e[i]) })
                                .product::<Rational>();
                        }
                    }
                }
                assert_eq!(mzv::zeta_dia_star(&k, n).unwrap(), star, "{k} N={n}");
            }
        }
    }
}

#[test]
fn two_row_sums_match_brute_force() {
    let rows: Vec<Index> = all_indices(4).into_iter().filter(|k| k.depth() <= 2).collect();
    for l in &rows {
        for k in rows.iter().filter(|k| k.depth() == l.depth()) {
            for n in 1..=6u64 {
                let nn = n as i64;
                let (le, ke) = (l.entries(), k.entries());
                let top = brute_blocks(
                    le,
                    nn,
                    |i, j, x| if j + 1 == le[i] as usize { inv_pow(x, ke[i]) } else { rat(1, nn - x) },
                    |_| false,
                );
                assert_eq!(mzv::zeta_tworow(l, k, n).unwrap(), top, "{l}/{k} N={n}");
                let flat = brute_blocks(
                    ke,
                    nn,
                    |i, j, x| if j == 0 { pw(&rat(1, nn - x), le[i]) } else { rat(1, x) },
                    |_| false,
                );
                assert_eq!(mzv::zeta_flat_tworow(l, k, n).unwrap(), flat, "{l}/{k} N={n}");
            }
        }
    }
}

#[test]
fn frozen_values() {
    // computed by the oracles above, then frozen
    assert_eq!(brute_zeta_dia(&ix(&[1, 2]), 3), rat(9, 8));
    assert_eq!(brute_zeta_dia(&ix(&[1, 1, 2]), 4), rat(1393, 1296));
    assert_eq!(mzv::zeta_dia(&ix(&[1, 1, 2]), 4).unwrap(), rat(1393, 1296));
    assert_eq!(brute_zeta_n(&ix(&[1, 2]), 4), rat(5, 12));
    assert_eq!(mzv::zeta_n(&ix(&[1, 2]), 4), rat(5, 12));
}

fn rising(a: &Rational, n: i64) -> Rational {
    (0..n).map(|j| a + int(j)).product()
}

fn binom_int(m: i64, n: i64) -> Rational {
    if n < 0 || n > m {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for j in 0..n {
        r = r * int(m - j) / int(j + 1);
    }
    r
}

fn binom_t(t: &Rational, n: i64) -> Rational {
    let mut r = Rational::one();
    for j in 0..n {
        r = r * (t - int(j)) / int(j + 1);
    }
    r
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn conn(n: i64, m: i64, big: i64, t: &Rational) -> Rational {
    if m == 0 {
        return Rational::zero();
    }
    let a = int(1 - big) - t;
    sign(n - 1) * int(n) * binom_int(m, n) * rising(&a, n + m) / (rising(&a, n) * rising(&a, m))
}

fn conn_general(first_reflected: bool, n: i64, second_reflected: bool, m: i64, big: i64, t: &Rational) -> Rational {
    let nt = |x: i64| int(big - x) + t;
    match (first_reflected, second_reflected) {
        (false, false) => conn(n, m, big, t),
        (true, false) => nt(n) / (int(big - n - m) + t) * conn(n, m, big, t),
        (false, true) => conn(n, m - 1, big, t),
        (true, true) => nt(n) * nt(m) / (int(m) * (int(big - n - m) + t)) * conn(n, m, big, t),
    }
}

fn brute_f(k: &Index, big: i64, t: &Rational) -> Rational {
    let e = k.entries();
    let mut s = Rational::zero();
    for a in subsets(&(0..e.len()).collect::<Vec<_>>()) {
        for v in nondecreasing(e.len(), 1, big - 1) {
            if bar_ok(&a, &v) {
                let p: Rational = (0..e.len())
                    .map(|i| if a.contains(&i) { pw(&(int(big - v[i]) + t), e[i]).recip() } else { inv_pow(v[i], e[i]) })
                    .product();
                s += sign(a.len() as i64) * p;
            }
        }
    }
    s
}

fn brute_g(k: &Index, big: i64, t: &Rational) -> Rational {
    let e = k.entries();
    let r = e.len();
    let cand: Vec<usize> = ones(k).into_iter().filter(|&i| i + 1 < r).collect();
    let mut s = Rational::zero();
    for a in subsets(&cand) {
        for v in nondecreasing(r, 1, big - 1) {
            if star_ok(&a, &v) {
                let p: Rational = (0..r)
                    .map(|i| if a.contains(&i) { (int(big - v[i]) + t).recip() } else { inv_pow(v[i], e[i]) })
                    .product();
                let nr = v[r - 1];
                let tail = sign(nr - 1) * binom_t(t, nr) * rising(&int(1 - big), nr) / rising(&(int(1 - big) - t), nr);
                s += p * tail;
            }
        }
    }
    s
}

fn brute_connected(k: &Index, l: &Index, big: i64, t: &Rational) -> Rational {
    let (ke, le) = (k.entries(), l.entries());
    let (r, s_len) = (ke.len(), le.len());
    let mut s = Rational::zero();
    for a in subsets(&ones(k)) {
        for b in subsets(&(0..s_len).collect::<Vec<_>>()) {
            for v in nondecreasing(r, 1, big - 1) {
                if !star_ok(&a, &v) {
                    continue;
                }
                let pk: Rational = (0..r)
                    .map(|i| if a.contains(&i) { (int(big - v[i]) + t).recip() } else { inv_pow(v[i], ke[i]) })
                    .product();
                for w in nondecreasing(s_len, 1, big - 1) {
                    if !bar_ok(&b, &w) {
                        continue;
                    }
                    let pl: Rational = (0..s_len)
                        .map(|j| if b.contains(&j) { pw(&(int(big - w[j]) + t), le[j]).recip() } else { inv_pow(w[j], le[j]) })
                        .product();
                    let c = conn_general(a.contains(&(r - 1)), v[r - 1], b.contains(&0), w[0], big, t);
                    s += sign(b.len() as i64) * c * &pk * pl;
                }
            }
        }
    }
    s
}

fn brute_connected_up(k: &Index, big: i64, t: &Rational) -> Rational {
    let e = k.entries();
    let r = e.len();
    let cand: Vec<usize> = ones(k).into_iter().filter(|&i| i + 1 < r).collect();
    let mut s = Rational::zero();
    for a in subsets(&cand) {
        for v in nondecreasing(r, 1, big - 1) {
            if star_ok(&a, &v) {
                let p: Rational = (0..r)
                    .map(|i| if a.contains(&i) { (int(big - v[i]) + t).recip() } else { inv_pow(v[i], e[i]) })
                    .product();
                s += p * conn(v[r - 1], big - 1, big, t) / int(v[r - 1]);
            }
        }
    }
    s
}

#[test]
fn kawashima_functions_match_brute_force() {
    for t in [rat(7, 3), rat(-5, 2)] {
        for k in all_indices(4) {
            for big in 1..=5u64 {
                let b = big as i64;
                assert_eq!(f_kawashima(&k, big, &t).unwrap(), brute_f(&k, b, &t), "F {k} N={big}");
                assert_eq!(g_kawashima(&k, big, &t).unwrap(), brute_g(&k, b, &t), "G {k} N={big}");
            }
        }
    }
}

#[test]
fn connected_sums_match_brute_force() {
    let t = rat(13, 7);
    let short: Vec<Index> = all_indices(3).into_iter().filter(|k| k.depth() <= 2).collect();
    for k in &short {
        for big in 2..=5u64 {
            let b = big as i64;
            assert_eq!(connected_sum_up(k, big, &t).unwrap(), brute_connected_up(k, b, &t), "{k} N={big}");
            for l in &short {
                assert_eq!(
                    connected_sum(k, l, big, &t, SecondFlag::First).unwrap(),
                    brute_connected(k, l, b, &t),
                    "{k}; {l} N={big}"
                );
            }
        }
    }
}

#[test]
fn frozen_kawashima_values() {
    let t = rat(1, 2);
    assert_eq!(brute_f(&ix(&[1]), 2, &t), rat(1, 3));
    assert_eq!(brute_g(&ix(&[1]), 2, &t), rat(1, 3));
    let t = rat(7, 3);
    let v = brute_f(&ix(&[1, 2]), 4, &t);
    assert_eq!(v, rat(2303, 2160));
    assert_eq!(f_kawashima(&ix(&[1, 2]), 4, &t).unwrap(), v);
    assert_eq!(g_kawashima(&ix(&[1, 2]).hoffman_dual().unwrap(), 4, &t).unwrap(), v);
}

#[test]
fn parameterized_sum_matches_brute_force() {
    let z = rat(19, 3);
    for k in all_indices(4) {
        let e = k.entries();
        for n0 in 0..3u64 {
            for big in n0 + 1..=5 {
                let (lo, hi) = (n0 as i64 + 1, big as i64);
                let mut s = Rational::zero();
                for a in subsets(&ones(&k)) {
                    for v in nondecreasing(e.len(), lo, hi) {
                        let mut w = v.clone();
                        w.push(hi);
                        let ok = (0..e.len()).all(|i| if a.contains(&i) { w[i] <= w[i + 1] } else { w[i] < w[i + 1] });
                        if ok {
                            s += (0..e.len())
                                .map(|i| if a.contains(&i) { (&z - int(v[i])).recip() } else { inv_pow(v[i], e[i]) })
                                .product::<Rational>();
                        }
                    }
                }
                assert_eq!(zeta_dia_param(&k, n0, big, &z).unwrap(), s, "{k} n0={n0} N={big}");
            }
        }
    }
}

fn brute_h(c: &Composition, big: i64) -> Rational {
    let ce = c.entries();
    let lens: Vec<usize> = ce.iter().map(|&x| x as usize).collect();
    let total: usize = lens.iter().sum();
    let ones: Vec<usize> = (0..ce.len()).filter(|&i| ce[i] == 1).collect();
    let mut s = Rational::zero();
    for a in subsets(&ones) {
        for v in nondecreasing(total, 0, big - 1) {
            let mut pos = 0;
            let mut prev_last = 0;
            let mut ok = true;
            let mut p = Rational::one() / pw(&int(big), a.len() as u32);
            for (i, &len) in lens.iter().enumerate() {
                let first = v[pos];
                ok &= if a.contains(&i) { prev_last == first } else { prev_last < first };
                if !a.contains(&i) {
                    for j in 0..len {
                        let x = v[pos + j];
                        p *= if i % 2 == 0 { rat(1, big - x) } else { rat(1, x.max(1)) };
                        if i % 2 == 1 && x == 0 {
                            ok = false;
                        }
                    }
                }
                prev_last = v[pos + len - 1];
                pos += len;
            }
            if ok {
                s += p;
            }
        }
    }
    s
}

#[test]
fn h_matches_brute_force() {
    for w in 2..=5 {
        for c in Composition::all_of_weight(w) {
            for big in 1..=5u64 {
                assert_eq!(difference::h_n(&c, big), brute_h(&c, big as i64), "{c} N={big}");
            }
        }
    }
}

#[test]
fn f_and_g_are_shifted_modified_sums() {
    for w in 2..=5 {
        for c in Composition::all_of_weight(w) {
            for big in 1..=5u64 {
                let f = brute_zeta_dia(&c.to_index(), big as i64);
                assert_eq!(difference::f_n(&c, big), f, "{c} N={big}");
                assert_eq!(difference::g_n(&c, big - 1), f, "{c} N={big}");
            }
        }
    }
}
