use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::sums::scalar::Scalar;

/// A power series in `t` truncated after `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn constant(r: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = r;
        TruncatedSeries { coeffs }
    }

    /// The series `t` itself.
    pub fn var(order: usize) -> Self {
        let mut s = Self::constant(Rational::zero(), order);
        if order >= 1 {
            s.coeffs[1] = Rational::from_integer(1.into());
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series truncation orders differ");
    }
}

impl Scalar for TruncatedSeries {
    fn lift(&self, r: Rational) -> Self {
        Self::constant(r, self.order())
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let m = self.order();
        let mut coeffs = vec![Rational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Pole("series with zero constant term is not invertible".into()));
        }
        let m = self.order();
        let inv0 = a0.recip();
        let mut b = vec![Rational::zero(); m + 1];
        b[0] = inv0.clone();
        for n in 1..=m {
            let mut s = Rational::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &b[n - k];
            }
            b[n] = -s * &inv0;
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    fn add_assign(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| alloc::format!("{c}"))).finish()?;
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
