//! Coefficient-ring abstraction shared by the series, polynomial and
//! q-calculus layers.
//!
//! Every ring used here contains the rationals, so integer division and
//! scalar ℚ-multiplication are always available through
//! [`Coefficient::from_rational`].

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A commutative ring containing ℚ.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    /// Multiplicative inverse when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div_i64(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        self.clone() * Self::from_rational(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Scalar action of a coefficient field `K` on a ring built over it.
pub trait Algebra<K>: Coefficient {
    fn scale(&self, k: &K) -> Self;
    fn embed(k: &K) -> Self;
}

impl Coefficient for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Algebra<BigRational> for BigRational {
    fn scale(&self, k: &BigRational) -> Self {
        self * k
    }

    fn embed(k: &BigRational) -> Self {
        k.clone()
    }
}

impl Coefficient for f64 {
    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn try_inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl Algebra<f64> for f64 {
    fn scale(&self, k: &f64) -> Self {
        self * k
    }

    fn embed(k: &f64) -> Self {
        *k
    }
}

impl Coefficient for Complex64 {
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
}

impl Algebra<Complex64> for Complex64 {
    fn scale(&self, k: &Complex64) -> Self {
        self * k
    }

    fn embed(k: &Complex64) -> Self {
        *k
    }
}

/// Convenience constructor for exact rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A coefficient ring acting on itself; what the q-constructions are
/// generic over.
pub trait Field: Algebra<Self> {}

impl<T: Algebra<T>> Field for T {}
