//! Truncated formal power series in one variable `t`.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `t^0, …, t^N` over any [`Coefficient`] ring. Binary operations demand
//! equal orders; the `std::ops` impls panic on mismatch, the `checked_*`
//! methods return [`Error::OrderMismatch`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Algebra, Coefficient};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    pub fn constant(order: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c · t^power`, or zero if `power` exceeds the order.
    pub fn monomial(order: usize, power: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(order, 1, C::one())
    }

    /// Takes the leading coefficients, padding with zeros up to `order`.
    pub fn from_coeffs<I: IntoIterator<Item = C>>(order: usize, coeffs: I) -> Self {
        let mut v: Vec<C> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, C::zero());
        TruncatedSeries { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff_at(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::OrderExceeded {
            index: n,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    /// Same series re-truncated (or zero-padded) to a different order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Multiplies every coefficient by an element of a coefficient field.
    pub fn scale_by<K>(&self, k: &K) -> Self
    where
        C: Algebra<K>,
    {
        self.map(|x| x.scale(k))
    }

    pub fn map<D, F: FnMut(&C) -> D>(&self, f: F) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `exp(self)` via `n·bₙ = Σ_{j=1..n} j·aⱼ·b_{n−j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut b = vec![C::zero(); n + 1];
        b[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() && !b[m - j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * b[m - j].clone() * C::from_i64(j as i64);
                }
            }
            b[m] = acc.div_i64(m as i64);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `log(self)` for a series with constant term 1, via
    /// `n·bₙ = n·aₙ − Σ_{j=1..n−1} j·bⱼ·a_{n−j}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut b = vec![C::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone() * C::from_i64(m as i64);
            for (j, bj) in b.iter().enumerate().take(m).skip(1) {
                if !bj.is_zero() && !self.coeffs[m - j].is_zero() {
                    acc = acc - bj.clone() * self.coeffs[m - j].clone() * C::from_i64(j as i64);
                }
            }
            b[m] = acc.div_i64(m as i64);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Multiplicative inverse by the direct recurrence
    /// `b₀ = a₀⁻¹`, `bₙ = −a₀⁻¹ Σ_{j=1..n} aⱼ b_{n−j}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertibleConstant)?;
        let n = self.order();
        let mut b = vec![C::zero(); n + 1];
        b[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = C::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * b[m - j].clone();
                }
            }
            b[m] = -(acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitution `t → c·t^k`.
    pub fn dilate(&self, c: &C, k: usize) -> Self {
        assert!(k >= 1, "dilation exponent must be positive");
        let n = self.order();
        let mut out = Self::zero(n);
        let mut cp = C::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.coeffs[i * k] = a.clone() * cp.clone();
            cp = cp * c.clone();
        }
        out
    }

    /// `Σ_m weights[m] · self^m` for a series with zero constant term;
    /// weights beyond the order are irrelevant.
    pub fn substitute_into<K>(&self, weights: &[K]) -> Result<Self>
    where
        C: Algebra<K>,
    {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for (m, w) in weights.iter().enumerate().take(n + 1) {
            if m > 0 {
                power = &power * self;
            }
            out = &out + &power.scale_by(w);
        }
        Ok(out)
    }
}

impl<C: Coefficient> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.checked_add(rhs).expect("series order mismatch")
    }
}

impl<C: Coefficient> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.checked_sub(rhs).expect("series order mismatch")
    }
}

impl<C: Coefficient> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.checked_mul(rhs).expect("series order mismatch")
    }
}

impl<C: Coefficient> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.map(|c| -c.clone())
    }
}
