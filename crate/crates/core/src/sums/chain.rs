//! Dynamic programming over chains of summation variables.
//!
//! A chain is a sequence of integer variables `v_1, ..., v_L`, each with an
//! inclusive range and a list of alternatives. An alternative carries a
//! weight function of the variable's value. Consecutive variables are linked
//! either by an order relation depending on the two chosen alternatives or
//! by an arbitrary kernel. The chain sum is
//!
//! ```text
//! sum over alternatives and values of  prod weight_i(v_i) * prod links
//! ```
//!
//! Order links are handled with prefix sums, so a chain of length `L` over a
//! range of size `N` costs `O(L * alts^2 * N)` scalar operations. Weights are
//! only evaluated at values that are reachable from the start of the chain,
//! which keeps excluded poles out of the computation.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::sums::scalar::Scalar;

/// Relation between consecutive variables `v_i` and `v_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    /// `v_i < v_{i+1}`
    Lt,
    /// `v_i <= v_{i+1}`
    Le,
    /// `v_i = v_{i+1}`
    Eq,
    /// The pair of alternatives is not allowed.
    Never,
}

pub type Weight<'a, T> = Box<dyn Fn(i64) -> Result<T> + 'a>;
type OrderFn<'a> = Box<dyn Fn(usize, usize) -> Rel + 'a>;
type KernelFn<'a, T> = Box<dyn Fn(usize, i64, usize, i64) -> Result<Option<T>> + 'a>;

/// One summation variable.
pub struct Node<'a, T> {
    lo: i64,
    hi: i64,
    alts: Vec<Weight<'a, T>>,
}

impl<'a, T> Node<'a, T> {
    pub fn new(lo: i64, hi: i64) -> Self {
        Node { lo, hi, alts: Vec::new() }
    }

    pub fn alt(mut self, w: impl Fn(i64) -> Result<T> + 'a) -> Self {
        self.alts.push(Box::new(w));
        self
    }

    pub fn alt_count(&self) -> usize {
        self.alts.len()
    }
}

enum Link<'a, T> {
    Order(OrderFn<'a>),
    Kernel(KernelFn<'a, T>),
}

/// A chain of nodes joined by links.
pub struct Chain<'a, T> {
    nodes: Vec<Node<'a, T>>,
    links: Vec<Link<'a, T>>,
}

type Column<T> = Vec<Option<T>>;

fn acc<T: Scalar>(slot: &mut Option<T>, v: &T) {
    match slot {
        Some(s) => s.add_assign(v),
        None => *slot = Some(v.clone()),
    }
}

impl<'a, T: Scalar> Chain<'a, T> {
    pub fn start(node: Node<'a, T>) -> Self {
        Chain { nodes: vec![node], links: Vec::new() }
    }

    /// Appends a node linked to the previous one by an order relation.
    pub fn then(mut self, rel: impl Fn(usize, usize) -> Rel + 'a, node: Node<'a, T>) -> Self {
        self.links.push(Link::Order(Box::new(rel)));
        self.nodes.push(node);
        self
    }

    /// Appends a node linked to the previous one by a kernel
    /// `(prev_alt, prev_value, alt, value) -> factor`; `None` forbids the pair.
    pub fn then_kernel(
        mut self,
        kernel: impl Fn(usize, i64, usize, i64) -> Result<Option<T>> + 'a,
        node: Node<'a, T>,
    ) -> Self {
        self.links.push(Link::Kernel(Box::new(kernel)));
        self.nodes.push(node);
        self
    }

    /// Evaluates the chain sum; `zero` fixes the shape of the result.
    pub fn sum(&self, zero: &T) -> Result<T> {
        let first = &self.nodes[0];
        let mut cols: Vec<Column<T>> = Vec::with_capacity(first.alts.len());
        for w in &first.alts {
            let mut col = Vec::new();
            for n in first.lo..=first.hi {
                col.push(Some(w(n)?));
            }
            cols.push(col);
        }
        for (link, pair) in self.links.iter().zip(self.nodes.windows(2)) {
            let (prev, node) = (&pair[0], &pair[1]);
            cols = match link {
                Link::Order(rel) => Self::step_order(prev, &cols, node, rel)?,
                Link::Kernel(k) => Self::step_kernel(prev, &cols, node, k)?,
            };
        }
        let mut total = zero.clone();
        for col in &cols {
            for v in col.iter().flatten() {
                total.add_assign(v);
            }
        }
        Ok(total)
    }

    fn step_order(
        prev: &Node<'a, T>,
        cols: &[Column<T>],
        node: &Node<'a, T>,
        rel: &OrderFn<'a>,
    ) -> Result<Vec<Column<T>>> {
        // prefix[a][i] = sum of cols[a][0..=i]
        let prefix: Vec<Column<T>> = cols
            .iter()
            .map(|col| {
                let mut run: Option<T> = None;
                col.iter()
                    .map(|v| {
                        if let Some(v) = v {
                            acc(&mut run, v);
                        }
                        run.clone()
                    })
                    .collect()
            })
            .collect();
        let last = prev.hi - prev.lo;
        let upto = |a: usize, x: i64| -> Option<&T> {
            let i = x - prev.lo;
            if i < 0 || last < 0 {
                None
            } else {
                prefix[a][i.min(last) as usize].as_ref()
            }
        };
        let at = |a: usize, x: i64| -> Option<&T> {
            let i = x - prev.lo;
            if i < 0 || i > last {
                None
            } else {
                cols[a][i as usize].as_ref()
            }
        };
        let mut out = Vec::with_capacity(node.alts.len());
        for (b, w) in node.alts.iter().enumerate() {
            let mut col = Vec::new();
            for m in node.lo..=node.hi {
                let mut inc: Option<T> = None;
                for a in 0..cols.len() {
                    let v = match rel(a, b) {
                        Rel::Lt => upto(a, m - 1),
                        Rel::Le => upto(a, m),
                        Rel::Eq => at(a, m),
                        Rel::Never => None,
                    };
                    if let Some(v) = v {
                        acc(&mut inc, v);
                    }
                }
                col.push(match inc {
                    Some(s) => Some(s.mul(&w(m)?)),
                    None => None,
                });
            }
            out.push(col);
        }
        Ok(out)
    }

    fn step_kernel(
        prev: &Node<'a, T>,
        cols: &[Column<T>],
        node: &Node<'a, T>,
        kernel: &KernelFn<'a, T>,
    ) -> Result<Vec<Column<T>>> {
        let mut out = Vec::with_capacity(node.alts.len());
        for (b, w) in node.alts.iter().enumerate() {
            let mut col = Vec::new();
            for m in node.lo..=node.hi {
                let mut inc: Option<T> = None;
                for (a, c) in cols.iter().enumerate() {
                    for (i, v) in c.iter().enumerate() {
                        let Some(v) = v else { continue };
                        if let Some(k) = kernel(a, prev.lo + i as i64, b, m)? {
                            acc(&mut inc, &v.mul(&k));
                        }
                    }
                }
                col.push(match inc {
                    Some(s) => Some(s.mul(&w(m)?)),
                    None => None,
                });
            }
            out.push(col);
        }
        Ok(out)
    }
}
