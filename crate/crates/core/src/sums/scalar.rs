use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// The field-like operations the lattice-sum evaluators need.
///
/// Implemented by [`Rational`] (evaluation at a point) and by
/// [`TruncatedSeries`](super::series::TruncatedSeries) (expansion in `t`).
/// Constants are created with [`Scalar::lift`], which copies the shape of an
/// existing value (the truncation order, for series).
pub trait Scalar: Clone {
    fn lift(&self, r: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn add_assign(&mut self, other: &Self);

    fn zero_like(&self) -> Self {
        self.lift(Rational::zero())
    }

    fn one_like(&self) -> Self {
        self.lift(Rational::one())
    }

    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }

    fn add_rational(&self, r: &Rational) -> Self {
        self.add(&self.lift(r.clone()))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul(&self.lift(r.clone()))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn lift(&self, r: Rational) -> Self {
        r
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::Pole("division by zero".into()))
        } else {
            Ok(self.recip())
        }
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}
