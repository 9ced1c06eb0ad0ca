use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `p/q`.
///
/// # Panics
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial in `t` with rational coefficients, lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty vector
/// and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient(Vec<Rational>);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(Vec::new())
    }

    pub fn one() -> Self {
        Coefficient(vec![Rational::one()])
    }

    /// The monomial `t^d`.
    pub fn t_pow(d: usize) -> Self {
        let mut v = vec![Rational::zero(); d + 1];
        v[d] = Rational::one();
        Coefficient(v)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut c = Coefficient(coeffs);
        c.trim();
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from(int(n))
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// The value if the polynomial is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    /// The value if the polynomial is an integer constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, s: &Rational) -> Coefficient {
        if s.is_zero() {
            return Coefficient::zero();
        }
        Coefficient(self.0.iter().map(|c| c * s).collect())
    }

    /// Multiplication by `t^d`.
    pub fn shift(&self, d: usize) -> Coefficient {
        if self.is_zero() {
            return Coefficient::zero();
        }
        let mut v = vec![Rational::zero(); d];
        v.extend(self.0.iter().cloned());
        Coefficient(v)
    }
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Self {
        Coefficient::from_coeffs(vec![r])
    }
}

impl From<BigInt> for Coefficient {
    fn from(n: BigInt) -> Self {
        Coefficient::from(Rational::from_integer(n))
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), Rational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), Rational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(mut self, rhs: Coefficient) -> Coefficient {
        self += &rhs;
        self
    }
}

impl Sub<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(mut self, rhs: Coefficient) -> Coefficient {
        self -= &rhs;
        self
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Mul<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Coefficient::from_coeffs(v)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
