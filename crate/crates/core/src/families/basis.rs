//! Sparse univariate polynomials in two bases: monomials `z^d` and the
//! cosine basis `cos(mθ)`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{rat, Algebra, Coefficient};

/// Finite sum `Σ c_d z^d` with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C> {
    coeffs: BTreeMap<u32, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(degree: u32, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Polynomial { coeffs }
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    fn add_term(&mut self, degree: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&degree) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(degree, sum);
        }
    }

    pub fn coeff(&self, degree: u32) -> C {
        self.coeffs.get(&degree).cloned().unwrap_or_else(C::zero)
    }

    /// `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: &C) -> C {
        let mut acc = C::zero();
        let mut last = self.degree().unwrap_or(0);
        for (d, c) in self.coeffs.iter().rev() {
            acc = acc * z.pow_u32(last - d) + c.clone();
            last = *d;
        }
        acc * z.pow_u32(last)
    }

    /// `self(arg)`.
    pub fn compose(&self, arg: &Polynomial<C>) -> Polynomial<C> {
        let mut acc = Polynomial::zero();
        let mut last = self.degree().unwrap_or(0);
        for (d, c) in self.coeffs.iter().rev() {
            acc = acc * arg.pow_u32(last - d) + Polynomial::constant(c.clone());
            last = *d;
        }
        acc * arg.pow_u32(last)
    }

    pub fn map<D: Coefficient, F: FnMut(&C) -> D>(&self, mut f: F) -> Polynomial<D> {
        Polynomial::from_terms(self.coeffs.iter().map(|(d, c)| (*d, f(c))))
    }

    pub fn try_map<D: Coefficient, E, F: FnMut(&C) -> std::result::Result<D, E>>(
        &self,
        mut f: F,
    ) -> std::result::Result<Polynomial<D>, E> {
        let mut out = Polynomial::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, f(c)?);
        }
        Ok(out)
    }

    /// Whether every exponent has the parity of `n`.
    pub fn has_parity(&self, n: u32) -> bool {
        self.coeffs.keys().all(|d| d % 2 == n % 2)
    }
}

impl<C: Coefficient> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial {
            coeffs: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> One for Polynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (d, c) in rhs.coeffs {
            self.add_term(d, c);
        }
        self
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Polynomial::zero();
        for (da, a) in &self.coeffs {
            for (db, b) in &rhs.coeffs {
                out.add_term(da + db, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Coefficient for Polynomial<C> {
    fn from_rational(r: &num_rational::BigRational) -> Self {
        Self::constant(C::from_rational(r))
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.iter().next() {
            None => None,
            Some((0, c)) if self.coeffs.len() == 1 => c.try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

impl<K, C: Algebra<K>> Algebra<K> for Polynomial<C> {
    fn scale(&self, k: &K) -> Self {
        self.map(|c| c.scale(k))
    }

    fn embed(k: &K) -> Self {
        Self::constant(C::embed(k))
    }
}

/// Finite sum `Σ c_m cos(mθ)`, `m ≥ 0`, with no stored zero coefficients.
///
/// Products fold through `cos a · cos b = ½(cos(a+b) + cos|a−b|)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CosPoly<C> {
    coeffs: BTreeMap<u32, C>,
}

impl<C: Coefficient> CosPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::cos(0, c)
    }

    /// `c · cos(mθ)`.
    pub fn cos(m: u32, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(m, c);
        }
        CosPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: u32, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(m, sum);
        }
    }

    pub fn coeff(&self, m: u32) -> C {
        self.coeffs.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map<D: Coefficient, F: FnMut(&C) -> D>(&self, mut f: F) -> CosPoly<D> {
        CosPoly::from_terms(self.coeffs.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map<D: Coefficient, E, F: FnMut(&C) -> std::result::Result<D, E>>(
        &self,
        mut f: F,
    ) -> std::result::Result<CosPoly<D>, E> {
        let mut out = CosPoly::zero();
        for (m, c) in &self.coeffs {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Rewrites in powers of `x = cos θ` using `cos(mθ) = T_m(x)`.
    pub fn to_monomials(&self) -> Polynomial<C> {
        let top = self.coeffs.keys().next_back().copied().unwrap_or(0);
        let mut cheb: Vec<Polynomial<C>> = vec![Polynomial::one(), Polynomial::var()];
        while cheb.len() <= top as usize {
            let n = cheb.len();
            let next =
                Polynomial::monomial(1, C::from_i64(2)) * cheb[n - 1].clone() - cheb[n - 2].clone();
            cheb.push(next);
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.coeffs {
            out = out + cheb[*m as usize].map(|x| x.clone() * c.clone());
        }
        out
    }
}

impl CosPoly<f64> {
    pub fn eval_theta(&self, theta: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(m, c)| c * (*m as f64 * theta).cos())
            .sum()
    }
}

impl<C: Coefficient> Zero for CosPoly<C> {
    fn zero() -> Self {
        CosPoly {
            coeffs: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> One for CosPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Add for CosPoly<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.coeffs {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coefficient> Neg for CosPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        CosPoly {
            coeffs: self.coeffs.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Sub for CosPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Mul for CosPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let half = C::from_rational(&rat(1, 2));
        let mut out = CosPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                let p = x.clone() * y.clone();
                if *a == 0 || *b == 0 {
                    out.add_term(a + b, p);
                } else {
                    let h = p * half.clone();
                    out.add_term(a + b, h.clone());
                    out.add_term(a.abs_diff(*b), h);
                }
            }
        }
        out
    }
}

impl<C: Coefficient> Coefficient for CosPoly<C> {
    fn from_rational(r: &num_rational::BigRational) -> Self {
        Self::constant(C::from_rational(r))
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.iter().next() {
            Some((0, c)) if self.coeffs.len() == 1 => c.try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

impl<K, C: Algebra<K>> Algebra<K> for CosPoly<C> {
    fn scale(&self, k: &K) -> Self {
        self.map(|c| c.scale(k))
    }

    fn embed(k: &K) -> Self {
        Self::constant(C::embed(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;
    type Cp = CosPoly<BigRational>;

    fn int(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn polynomial_arithmetic_and_composition() {
        let z = P::var();
        let p = z.clone() * z.clone() - P::constant(int(1));
        let q = p.compose(&(z.clone() + P::constant(int(1))));
        assert_eq!(q, P::from_terms([(2, int(1)), (1, int(2))]));
        assert_eq!(p.eval(&int(3)), int(8));
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn cosine_products_fold() {
        let c1 = Cp::cos(1, int(1));
        let sq = c1.clone() * c1;
        assert_eq!(sq, Cp::from_terms([(0, rat(1, 2)), (2, rat(1, 2))]));
        let x = Cp::cos(3, int(2)) * Cp::cos(1, int(1));
        assert_eq!(x, Cp::from_terms([(4, int(1)), (2, int(1))]));
    }

    #[test]
    fn chebyshev_conversion() {
        let c = Cp::cos(3, int(1));
        assert_eq!(c.to_monomials(), P::from_terms([(3, int(4)), (1, int(-3))]));
    }

    #[test]
    fn float_cosine_evaluation() {
        let c = CosPoly::<f64>::from_terms([(0, 1.0), (2, 2.0)]);
        let th = 0.3f64;
        assert!((c.eval_theta(th) - (1.0 + 2.0 * (2.0 * th).cos())).abs() < 1e-15);
    }
}
