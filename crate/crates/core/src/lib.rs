//! Exact kernels for rewriting multiple zeta values over the indices whose
//! entries are all at least 2.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised as
//!
//! * [`index`]: indices, words over `{x, y}`, compositions, dualities and
//!   enumeration of the admissible / `>= 2` / Hoffman index classes;
//! * [`algebra`]: formal linear combinations of words with coefficients in
//!   `Q[t]`, the harmonic products, `phi`, star sums and `t`-interpolation;
//! * [`expand`]: the integer recurrence for the `Drop1` normal form and the
//!   expansion of an admissible index into the `>= 2` basis;
//! * [`sums`]: exact evaluators for truncated multiple harmonic sums and all
//!   their modified, flat, star and Kawashima-type variants;
//! * [`lab`]: relation generators, verification, exact rank and the
//!   `LinKaw*` vs `Drop1` explorer.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod error;
pub mod expand;
pub mod index;
pub mod lab;
pub mod sums;

pub use algebra::{Coefficient, Rational, WordCombo};
pub use error::{Error, Result};
pub use expand::{Expander, IntExpansion};
pub use index::{Composition, Index, IndexClass, Letter, Word};
