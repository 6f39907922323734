use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::intpoly::{IntPoly, Monomial};
use crate::error::{Error, Result};
use crate::scalar::{Algebra, Coefficient};

/// Element of ℚ(s, Λ) with `q = s²` and `Λ = q^λ`.
///
/// Always canonical: numerator and denominator are coprime in Z[s, Λ], the
/// denominator has a positive leading coefficient, and zero is `0/1`.
/// Negative powers of `s` live in the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Canonicalizes `num/den`.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalized(num, den)
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.leading().is_some_and(|(_, c)| c < &BigInt::zero()) {
            RatFunc {
                num: -num,
                den: -den,
            }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(IntPoly::constant(n))
    }

    pub fn s() -> Self {
        Self::from_poly(IntPoly::s())
    }

    pub fn lambda() -> Self {
        Self::from_poly(IntPoly::lambda())
    }

    pub fn q() -> Self {
        Self::s_pow(2)
    }

    /// `s^e`, i.e. `q^{e/2}`, for any integer `e`.
    pub fn s_pow(e: i64) -> Self {
        let m = IntPoly::monomial(Monomial::new(e.unsigned_abs() as u32, 0), 1);
        if e >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(2 * e)
    }

    /// `Λ^e = q^{eλ}`, `e ≥ 0`.
    pub fn lambda_pow(e: u32) -> Self {
        Self::from_poly(IntPoly::monomial(Monomial::new(0, e), 1))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn contains_lambda(&self) -> bool {
        self.num.contains_lambda() || self.den.contains_lambda()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact value at `s = 1` after cancelling common `(s − 1)` factors.
    pub fn limit_q_to_1(&self) -> Result<BigRational> {
        if self.contains_lambda() {
            return Err(Error::LambdaPresent);
        }
        let mut num = self.num.s_coefficients();
        let mut den = self.den.s_coefficients();
        while !num.iter().all(Zero::is_zero) && sum(&num).is_zero() && sum(&den).is_zero() {
            num = deflate_at_one(&num);
            den = deflate_at_one(&den);
        }
        let d = sum(&den);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(BigRational::new(sum(&num), d))
    }

    /// Double-precision complex evaluation at the given `s` and `Λ`.
    pub fn eval_numeric(&self, s: Complex64, lambda: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(s, lambda);
        if d.norm() < 1e-12 {
            return Err(Error::NumericPole);
        }
        Ok(self.num.eval_complex(s, lambda) / d)
    }

    /// Evaluation at a real `q > 0` (with `s = √q`) and a real `Λ`.
    pub fn eval_at_q(&self, q: f64, lambda: f64) -> Result<f64> {
        self.eval_numeric(Complex64::new(q.sqrt(), 0.0), Complex64::new(lambda, 0.0))
            .map(|c| c.re)
    }

    /// Substitutes `Λ := value`.
    pub fn subs_lambda(&self, value: &RatFunc) -> Result<RatFunc> {
        let eval = |p: &IntPoly| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let coeff = RatFunc::from_poly(IntPoly::monomial(Monomial::new(m.s, 0), c.clone()));
                acc = acc + coeff * value.powi(m.l as i64).expect("non-negative power");
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }
}

fn sum(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

/// Synthetic division by `(s − 1)`; the caller guarantees a root at 1.
fn deflate_at_one(v: &[BigInt]) -> Vec<BigInt> {
    if v.len() <= 1 {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); v.len() - 1];
    let mut carry = BigInt::zero();
    for i in (1..v.len()).rev() {
        carry += &v[i];
        out[i - 1] = carry.clone();
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::normalized(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::normalized(&(&rhs.num * &self.den) + &self.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &self.den * &d1;
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = num.gcd(&g);
        if g2.is_one() {
            RatFunc::normalized(num, den)
        } else {
            RatFunc::normalized(
                num.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

fn cancel(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly) {
    if a.is_one() || b.is_one() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&g).expect("gcd divides"),
            b.div_exact(&g).expect("gcd divides"),
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::normalized(&a * &c, &b * &d)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Coefficient for RatFunc {
    fn from_rational(r: &BigRational) -> Self {
        RatFunc::normalized(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn pow_u32(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl Algebra<RatFunc> for RatFunc {
    fn scale(&self, k: &RatFunc) -> Self {
        self * k
    }

    fn embed(k: &RatFunc) -> Self {
        k.clone()
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_ratfunc(self, super::text::Style::Text))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse_ratfunc(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn doubling_of_a_quotient() {
        let x = (&one() - &q()) / (&one() + &q());
        let two = RatFunc::from_int(2);
        assert_eq!(&x + &x, &two * &x);
        assert_eq!((&x + &x).denom(), (&one() + &q()).numer());
        assert_eq!((&x + &x).numer(), (two * (&one() - &q())).numer());
    }

    #[test]
    fn geometric_sum_cancels() {
        let x = (&one() - &q().pow_u32(3)) / (&one() - &q());
        assert!(x.denom().is_one());
        assert_eq!(x, one() + q() + q().pow_u32(2));
    }

    #[test]
    fn inverse_of_half_integer_power() {
        let x = RatFunc::s_pow(-45);
        assert!(x.numer().is_one());
        assert_eq!(&x * &RatFunc::s_pow(45), one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            one().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RatFunc::zero().powi(-1), Err(Error::DivisionByZero));
        assert_eq!(
            RatFunc::new(IntPoly::one(), IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn integer_content_is_reduced() {
        let x = RatFunc::new(IntPoly::constant(2), IntPoly::constant(4)).unwrap();
        assert_eq!(x, RatFunc::from_rational(&rat(1, 2)));
        let y = RatFunc::new(IntPoly::constant(3), IntPoly::constant(-6)).unwrap();
        assert_eq!(y, RatFunc::from_rational(&rat(-1, 2)));
    }

    #[test]
    fn limits_at_one() {
        let seven = (&one() - &q().pow_u32(7)) / (&one() - &q());
        assert_eq!(seven.limit_q_to_1(), Ok(rat(7, 1)));
        let c2 = (&one() - &q()) / (RatFunc::from_int(2) * (&one() + &q()));
        assert_eq!(c2.limit_q_to_1(), Ok(rat(0, 1)));
        let pole = one() / (&one() - &q());
        assert_eq!(pole.limit_q_to_1(), Err(Error::PoleAtOne));
        assert_eq!(RatFunc::lambda().limit_q_to_1(), Err(Error::LambdaPresent));
    }

    #[test]
    fn numeric_evaluation() {
        let f = one() + q() + q().pow_u32(2);
        let v = f.eval_at_q(0.7, 0.0).unwrap();
        assert!((v - 2.19).abs() < 1e-12);
        let c2 = (&one() - &q()) / (RatFunc::from_int(2) * (&one() + &q()));
        assert!((c2.eval_at_q(0.5, 0.0).unwrap() - 1.0 / 6.0).abs() < 1e-12);
        let pole = one() / (&one() - &q());
        assert_eq!(pole.eval_at_q(1.0, 0.0), Err(Error::NumericPole));
    }

    #[test]
    fn lambda_substitution() {
        let beta1 = (&one() - &RatFunc::lambda()) / (&one() - &q());
        assert_eq!(beta1.subs_lambda(&q()).unwrap(), one());
    }
}
