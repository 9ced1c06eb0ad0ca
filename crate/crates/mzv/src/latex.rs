//! LaTeX rendering of expansions as `\zeta(...)` lists.

use std::cmp::Ordering;
use std::fmt::Write;

use mzv_core::{Index, IntExpansion};
use num_traits::{One, Signed, Zero};

/// Depth first, then entries compared from the right.
fn display_order(a: &Index, b: &Index) -> Ordering {
    a.depth().cmp(&b.depth()).then_with(|| a.entries().iter().rev().cmp(b.entries().iter().rev()))
}

pub fn zeta(k: &Index) -> String {
    let parts: Vec<String> = k.entries().iter().map(u32::to_string).collect();
    format!("\\zeta({})", parts.join(","))
}

/// `\zeta(3,1,4) &= \zeta(5,3) - \zeta(4,4) - ...`
pub fn expansion(k: &Index, e: &IntExpansion) -> String {
    let mut terms: Vec<_> = e.iter().collect();
    terms.sort_by(|a, b| display_order(a.0, b.0));
    let mut out = format!("{} &=", zeta(k));
    if terms.is_empty() {
        out.push_str(" 0");
    }
    for (i, (l, c)) in terms.into_iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if c.is_negative() {
                out.push_str(" -");
            } else {
                out.push(' ');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        let a = c.abs();
        if !a.is_one() && !a.is_zero() {
            write!(out, "{a}").unwrap();
        }
        out.push_str(&zeta(l));
    }
    out
}

/// Several expansions as an `align*` block.
pub fn block(rows: &[(Index, IntExpansion)]) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for (i, (k, e)) in rows.iter().enumerate() {
        let end = if i + 1 == rows.len() { "" } else { ", \\\\" };
        writeln!(out, "    {}{end}", expansion(k, e)).unwrap();
    }
    out.push_str("\\end{align*}\n");
    out
}
