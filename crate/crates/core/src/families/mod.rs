//! Classical and q-deformed Hermite, Laguerre and Gegenbauer polynomials.
//!
//! Each q-family is built by coefficient extraction from its generating
//! function, and (where one exists) also from an explicit sum, so the two
//! routes check each other. The q-constructions take a [`QParams`] and are
//! generic over the field; [`QParams::symbolic`] gives exact results in
//! ℚ(s, Λ), a float instance gives a numeric cross-check.

mod basis;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use basis::{CosPoly, Polynomial};

use crate::error::{Error, Result};
use crate::field::RatFunc;
use crate::qkernel::{self, invert, QBase, QExpKind};
use crate::scalar::{Coefficient, Field};
use crate::series::TruncatedSeries;

/// The point `(q^{1/2}, q^λ)` at which the q-families are built.
#[derive(Clone, Debug, PartialEq)]
pub struct QParams<K> {
    pub s: K,
    pub lambda: K,
}

impl QParams<RatFunc> {
    /// The generators themselves: exact results in ℚ(s, Λ).
    pub fn symbolic() -> Self {
        QParams {
            s: RatFunc::s(),
            lambda: RatFunc::lambda(),
        }
    }
}

impl QParams<f64> {
    /// Real sample point `q`, `Λ = q^λ`.
    pub fn sample(q: f64, lambda: f64) -> Self {
        QParams {
            s: q.sqrt(),
            lambda: q.powf(lambda),
        }
    }
}

impl<K: Coefficient> QParams<K> {
    pub fn q(&self) -> K {
        self.s.clone() * self.s.clone()
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(&self, e: i64) -> Result<K> {
        let q = self.q();
        let b = if e < 0 { invert(&q)? } else { q };
        Ok(b.pow_u32(e.unsigned_abs() as u32))
    }

    /// `s^e = q^{e/2}`.
    pub fn s_pow(&self, e: i64) -> Result<K> {
        let b = if e < 0 {
            invert(&self.s)?
        } else {
            self.s.clone()
        };
        Ok(b.pow_u32(e.unsigned_abs() as u32))
    }

    pub fn base(&self, e: i64) -> Result<QBase<K>> {
        QBase::new(self.q_pow(e)?)
    }

    /// `[λ]_{q^k} = (1 − Λᵏ)/(1 − qᵏ)`.
    pub fn lambda_number(&self, k: u32) -> Result<K> {
        qkernel::lambda_number(&self.lambda.pow_u32(k), &self.base(k as i64)?)
    }
}

/// Polynomial in `z` over ℚ(s, Λ).
pub type ZPolynomial = Polynomial<RatFunc>;
/// Polynomial in the `cos(mθ)` basis over ℚ(s, Λ).
pub type CosPolynomial = CosPoly<RatFunc>;

/// Index pair of `L_k^{(α)}`; `α` may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaguerreIndex {
    pub k: u32,
    pub alpha: i64,
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, m| acc * m)
}

/// `n(n−1)⋯(n−m+1)/m!` for any integer `n`.
pub fn generalized_binomial(n: i64, m: u32) -> BigRational {
    let falling = (0..m as i64).fold(BigInt::one(), |acc, j| acc * (n - j));
    BigRational::new(falling, factorial(m))
}

fn check_order(n: u32, order: usize) -> Result<()> {
    if n as usize > order {
        return Err(Error::OrderExceeded {
            index: n as usize,
            order,
        });
    }
    Ok(())
}

/// `H_n(z) = Σ_ℓ (−1)^ℓ n! (2z)^{n−2ℓ} / (ℓ! (n−2ℓ)!)`.
pub fn hermite_classical<C: Coefficient>(n: u32) -> Polynomial<C> {
    let nf = factorial(n);
    Polynomial::from_terms((0..=n / 2).map(|l| {
        let d = n - 2 * l;
        let mut c = BigRational::new(&nf * BigInt::from(2).pow(d), factorial(l) * factorial(d));
        if l % 2 == 1 {
            c = -c;
        }
        (d, C::from_rational(&c))
    }))
}

/// `L_k^{(n−k)}(w) = Σ_ℓ (−1)^ℓ C(n, k−ℓ) w^ℓ / ℓ!` with `w = argument`.
pub fn laguerre_classical<C: Coefficient>(
    idx: LaguerreIndex,
    argument: &Polynomial<C>,
) -> Polynomial<C> {
    let n = idx.k as i64 + idx.alpha;
    let coeffs = Polynomial::from_terms((0..=idx.k).map(|l| {
        let mut c = generalized_binomial(n, idx.k - l) / BigRational::from_integer(factorial(l));
        if l % 2 == 1 {
            c = -c;
        }
        (l, C::from_rational(&c))
    }));
    coeffs.compose(argument)
}

/// Chebyshev case `C_n(cos θ) = Σ_ℓ cos((n−2ℓ)θ)`.
pub fn gegenbauer_classical<C: Coefficient>(n: u32) -> CosPoly<C> {
    CosPoly::from_terms(
        (0..=n).map(|l| ((n as i64 - 2 * l as i64).unsigned_abs() as u32, C::one())),
    )
}

/// `H_n(z;q)` from the generating function
/// `E_{q⁻²}(2(1−q⁻²)zt) · e_{q⁻⁴}(−2(1−q⁻⁴)t²/(q(1+q⁻²)))`.
pub fn q_hermite_in<K: Field>(p: &QParams<K>, n: u32) -> Result<Polynomial<K>> {
    let order = n as usize;
    let b2 = p.base(-2)?;
    let b4 = p.base(-4)?;
    let one = K::one();
    let a1 = (one.clone() - b2.value().clone()) * K::from_i64(2);
    let arg1 = TruncatedSeries::monomial(order, 1, Polynomial::monomial(1, a1));
    let a2 = -((one.clone() - b4.value().clone())
        * K::from_i64(2)
        * invert(&(p.q() * (one + b2.value().clone())))?);
    let arg2 = TruncatedSeries::monomial(order, 2, Polynomial::constant(a2));
    let g = &qkernel::q_exp_sum(QExpKind::Big, &arg1, &b2)?
        * &qkernel::q_exp_sum(QExpKind::Little, &arg2, &b4)?;
    let scale = qkernel::q_factorial(n, &b2) * p.s_pow(-(n as i64))?;
    Ok(g.coeffs()[order].map(|c| c.clone() * scale.clone()))
}

pub fn q_hermite(n: u32, order: usize) -> Result<ZPolynomial> {
    check_order(n, order)?;
    q_hermite_in(&QParams::symbolic(), n)
}

/// `L_k^{(n−k)}(z;q)`: the `t^k` coefficient of `E_q(−(1−q)zt)(−q/t;q)_n tⁿ`
/// divided by `q^{(n−k)(n−k+1)/2}`.
pub fn q_laguerre_in<K: Field>(p: &QParams<K>, n: u32, k: u32) -> Result<Polynomial<K>> {
    let order = k as usize;
    let q = p.base(1)?;
    // (−q/t; q)_n tⁿ = ∏_{j<n} (t + q^{j+1})
    let mut prod = TruncatedSeries::<Polynomial<K>>::one(order);
    let mut qj = K::one();
    for _ in 0..n {
        qj = qj * q.value().clone();
        let factor = TruncatedSeries::from_coeffs(
            order,
            [Polynomial::constant(qj.clone()), Polynomial::one()],
        );
        prod = &prod * &factor;
    }
    let a = -(K::one() - q.value().clone());
    let arg = TruncatedSeries::monomial(order, 1, Polynomial::monomial(1, a));
    let g = &qkernel::q_exp_sum(QExpKind::Big, &arg, &q)? * &prod;
    let d = n as i64 - k as i64;
    let scale = p.q_pow(-(d * (d + 1) / 2))?;
    Ok(g.coeffs()[order].map(|c| c.clone() * scale.clone()))
}

pub fn q_laguerre(n: u32, k: u32, order: usize) -> Result<ZPolynomial> {
    check_order(k, order)?;
    q_laguerre_in(&QParams::symbolic(), n, k)
}

/// Explicit form `Σ_ℓ (Λ;q)_ℓ (Λ;q)_{n−ℓ} / ((q;q)_ℓ (q;q)_{n−ℓ}) cos((n−2ℓ)θ)`.
pub fn q_gegenbauer_direct_in<K: Field>(p: &QParams<K>, n: u32) -> Result<CosPoly<K>> {
    let q = p.base(1)?;
    let mut ratio = Vec::with_capacity(n as usize + 1);
    for l in 0..=n {
        let num = qkernel::q_pochhammer(&p.lambda, &q, l);
        let den = qkernel::q_pochhammer(q.value(), &q, l);
        ratio.push(num * invert(&den)?);
    }
    Ok(CosPoly::from_terms((0..=n).map(|l| {
        let m = (n as i64 - 2 * l as i64).unsigned_abs() as u32;
        (
            m,
            ratio[l as usize].clone() * ratio[(n - l) as usize].clone(),
        )
    })))
}

pub fn q_gegenbauer_direct(n: u32) -> Result<CosPolynomial> {
    q_gegenbauer_direct_in(&QParams::symbolic(), n)
}

/// `[tⁿ] exp(2 Σ_k [λ]_{q^k} cos(kθ) tᵏ/k)`.
pub fn q_gegenbauer_genfun_in<K: Field>(p: &QParams<K>, n: u32) -> Result<CosPoly<K>> {
    let order = n as usize;
    let mut a = vec![CosPoly::zero()];
    for k in 1..=n {
        let c = (p.lambda_number(k)? * K::from_i64(2)).div_i64(k as i64);
        a.push(CosPoly::cos(k, c));
    }
    let g = TruncatedSeries::from_coeffs(order, a).exp()?;
    Ok(g.coeffs()[order].clone())
}

pub fn q_gegenbauer_genfun(n: u32, order: usize) -> Result<CosPolynomial> {
    check_order(n, order)?;
    q_gegenbauer_genfun_in(&QParams::symbolic(), n)
}

/// Coefficient-wise `q → 1` limit.
pub fn limit_q_to_1(p: &ZPolynomial) -> Result<Polynomial<BigRational>> {
    p.try_map(RatFunc::limit_q_to_1)
}

/// Coefficient-wise evaluation at real `q` and `Λ`.
pub fn eval_at_q(p: &ZPolynomial, q: f64, lambda: f64) -> Result<Polynomial<f64>> {
    p.try_map(|c| c.eval_at_q(q, lambda))
}

pub fn eval_cos_at_q(p: &CosPolynomial, q: f64, lambda: f64) -> Result<CosPoly<f64>> {
    p.try_map(|c| c.eval_at_q(q, lambda))
}
