//! q-numbers, q-factorials, q-binomials, q-Pochhammer symbols, Quesne
//! coefficients and the Jackson q-exponentials.
//!
//! Everything is generic over the coefficient field `K`, so the same code
//! runs on exact rational functions and on plain floats.

use crate::error::{Error, Result};
use crate::field::RatFunc;
use crate::scalar::{Algebra, Coefficient};
use crate::series::TruncatedSeries;

/// A q-base, i.e. an element of the field different from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct QBase<K> {
    value: K,
}

impl<K: Coefficient> QBase<K> {
    pub fn new(value: K) -> Result<Self> {
        if value.is_one() {
            return Err(Error::InvalidBase);
        }
        Ok(QBase { value })
    }

    pub fn value(&self) -> &K {
        &self.value
    }

    /// The base `b^k`.
    pub fn power(&self, k: u32) -> Result<Self> {
        QBase::new(self.value.pow_u32(k))
    }
}

impl QBase<RatFunc> {
    /// `q^e` with `q = s²`.
    pub fn q_pow(e: i64) -> Self {
        assert!(e != 0, "q^0 is not a valid base");
        QBase {
            value: RatFunc::q_pow(e),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }
}

/// Which Jackson exponential: `e_q` (little) or `E_q` (big).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QExpKind {
    Little,
    Big,
}

pub(crate) fn invert<K: Coefficient>(x: &K) -> Result<K> {
    x.try_inverse().ok_or(Error::DivisionByZero)
}

/// `[n]_b = 1 + b + … + b^{n−1}`, which equals `(1−bⁿ)/(1−b)`.
pub fn q_number<K: Coefficient>(n: u32, base: &QBase<K>) -> K {
    let mut acc = K::zero();
    let mut p = K::one();
    for _ in 0..n {
        acc = acc + p.clone();
        p = p * base.value.clone();
    }
    acc
}

/// `[n]_b! = [n]_b ⋯ [1]_b`, with `[0]_b! = 1`.
pub fn q_factorial<K: Coefficient>(n: u32, base: &QBase<K>) -> K {
    (1..=n).fold(K::one(), |acc, m| acc * q_number(m, base))
}

/// Gaussian binomial, built by the q-Pascal rule so it stays polynomial.
pub fn q_binomial<K: Coefficient>(n: u32, l: u32, base: &QBase<K>) -> Result<K> {
    if l > n {
        return Err(Error::IndexOutOfRange(format!(
            "q-binomial ({n} choose {l})"
        )));
    }
    // row[j] = [m choose j]_b; [m+1 choose j] = [m choose j−1] + b^j [m choose j]
    let mut row = vec![K::one()];
    for _ in 0..n {
        let mut next = vec![K::one(); row.len() + 1];
        let mut bj = base.value.clone();
        for j in 1..row.len() {
            next[j] = row[j - 1].clone() + bj.clone() * row[j].clone();
            bj = bj * base.value.clone();
        }
        row = next;
    }
    Ok(row[l as usize].clone())
}

/// `(a; b)_n = ∏_{k<n} (1 − a bᵏ)`.
pub fn q_pochhammer<K: Coefficient>(a: &K, base: &QBase<K>, n: u32) -> K {
    let mut acc = K::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * (K::one() - term.clone());
        term = term * base.value.clone();
    }
    acc
}

/// Quesne's coefficient `c_k(b) = (1−b)^{k−1} / (k [k]_b)`.
pub fn quesne_c<K: Coefficient>(k: u32, base: &QBase<K>) -> Result<K> {
    if k == 0 {
        return Err(Error::IndexOutOfRange("Quesne coefficient index 0".into()));
    }
    let num = (K::one() - base.value.clone()).pow_u32(k - 1);
    Ok((num * invert(&q_number(k, base))?).div_i64(k as i64))
}

/// Coefficients `w_n` of the defining sums `Σ w_n zⁿ`, for `n ≤ order`.
fn jackson_weights<K: Coefficient>(
    kind: QExpKind,
    base: &QBase<K>,
    order: usize,
) -> Result<Vec<K>> {
    let mut out = Vec::with_capacity(order + 1);
    let mut poch = K::one();
    let mut tri = K::one(); // b^{n(n−1)/2}
    let mut bn = K::one(); // bⁿ
    for n in 0..=order {
        if n > 0 {
            poch = poch * (K::one() - bn.clone() * base.value.clone());
            tri = tri * bn.clone();
            bn = bn * base.value.clone();
        }
        let inv = invert(&poch)?;
        out.push(match kind {
            QExpKind::Little => inv,
            QExpKind::Big => tri.clone() * inv,
        });
    }
    Ok(out)
}

/// `e_b(arg)` or `E_b(arg)` from the defining power series.
pub fn q_exp_sum<K, C>(
    kind: QExpKind,
    arg: &TruncatedSeries<C>,
    base: &QBase<K>,
) -> Result<TruncatedSeries<C>>
where
    K: Coefficient,
    C: Algebra<K>,
{
    if !arg.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let w = jackson_weights(kind, base, arg.order())?;
    arg.substitute_into(&w)
}

/// `e_b(arg) = exp(Σ zᵏ/(k(1−bᵏ)))`, `E_b(arg) = exp(Σ (−1)^{k+1} zᵏ/(k(1−bᵏ)))`.
pub fn q_exp_product_form<K, C>(
    kind: QExpKind,
    arg: &TruncatedSeries<C>,
    base: &QBase<K>,
) -> Result<TruncatedSeries<C>>
where
    K: Coefficient,
    C: Algebra<K>,
{
    if !arg.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut w = vec![K::zero()];
    let mut bk = K::one();
    for k in 1..=arg.order() {
        bk = bk * base.value.clone();
        let mut x = invert(&(K::one() - bk.clone()))?.div_i64(k as i64);
        if kind == QExpKind::Big && k % 2 == 0 {
            x = -x;
        }
        w.push(x);
    }
    arg.substitute_into(&w)?.exp()
}

/// `exp_b(arg) = Σ zⁿ/[n]_b!`.
pub fn exp_q_sum<K, C>(arg: &TruncatedSeries<C>, base: &QBase<K>) -> Result<TruncatedSeries<C>>
where
    K: Coefficient,
    C: Algebra<K>,
{
    if !arg.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let w = (0..=arg.order() as u32)
        .map(|n| invert(&q_factorial(n, base)))
        .collect::<Result<Vec<K>>>()?;
    arg.substitute_into(&w)
}

/// `exp_b(arg) = exp(Σ c_k(b) zᵏ)`.
pub fn exp_q_quesne<K, C>(arg: &TruncatedSeries<C>, base: &QBase<K>) -> Result<TruncatedSeries<C>>
where
    K: Coefficient,
    C: Algebra<K>,
{
    if !arg.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut w = vec![K::zero()];
    for k in 1..=arg.order() as u32 {
        w.push(quesne_c(k, base)?);
    }
    arg.substitute_into(&w)?.exp()
}

/// `[λ]_{b} = (1 − Λ)/(1 − b)` where `Λ` plays the role of `b^λ`.
pub fn lambda_number<K: Coefficient>(lambda_power: &K, base: &QBase<K>) -> Result<K> {
    Ok((K::one() - lambda_power.clone()) * invert(&(K::one() - base.value.clone()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::text::parse_ratfunc;
    use crate::series::DEFAULT_ORDER;
    use num_traits::{One, Zero};

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn q_numbers() {
        let q = QBase::q();
        assert!(q_number(0, &q).is_zero());
        assert_eq!(q_number(3, &q), r("1 + q + q^2"));
        assert_eq!(q_number(2, &QBase::q_pow(-2)), r("1 + q^{-2}"));
        let direct = (RatFunc::one() - RatFunc::q_pow(7)) / (RatFunc::one() - RatFunc::q());
        assert_eq!(q_number(7, &q), direct);
    }

    #[test]
    fn factorials_and_binomials() {
        let q = QBase::q();
        assert!(q_factorial(0, &q).is_one());
        assert_eq!(q_binomial(3, 1, &q).unwrap(), r("1 + q + q^2"));
        for n in 0..7 {
            assert!(q_binomial(n, 0, &q).unwrap().is_one());
            for l in 0..=n {
                let b = q_binomial(n, l, &q).unwrap();
                assert_eq!(b, q_binomial(n, n - l, &q).unwrap());
                let via_factorials =
                    q_factorial(n, &q) / (q_factorial(l, &q) * q_factorial(n - l, &q));
                assert_eq!(b, via_factorials);
            }
        }
        assert!(matches!(
            q_binomial(2, 3, &q),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn pochhammer_symbols() {
        let q = QBase::q();
        assert!(q_pochhammer(&RatFunc::lambda(), &q, 0).is_one());
        assert_eq!(
            q_pochhammer(&RatFunc::lambda(), &q, 1),
            RatFunc::one() - RatFunc::lambda()
        );
        assert_eq!(
            q_pochhammer(&RatFunc::q(), &q, 2),
            r("(1 - q)") * r("1 - q^2")
        );
    }

    #[test]
    fn quesne_coefficients() {
        let q = QBase::q();
        assert!(quesne_c(1, &q).unwrap().is_one());
        assert_eq!(quesne_c(2, &q).unwrap(), r("(1 - q)/(2 + 2q)"));
        assert_eq!(
            quesne_c(3, &q).unwrap(),
            r("(1 - 2q + q^2)/(3 + 3q + 3q^2)")
        );
        assert_eq!(
            quesne_c(1, &q).unwrap().limit_q_to_1().unwrap(),
            num_traits::One::one()
        );
        for k in 2..8 {
            assert!(quesne_c(k, &q).unwrap().limit_q_to_1().unwrap().is_zero());
        }
        assert!(quesne_c(0, &q).is_err());
    }

    #[test]
    fn jackson_sums() {
        let q = QBase::q();
        let t = TruncatedSeries::<RatFunc>::variable(4);
        let e = q_exp_sum(QExpKind::Little, &t, &q).unwrap();
        assert_eq!(e.coeffs()[1], r("1/(1 - q)"));
        let big = q_exp_sum(QExpKind::Big, &t, &q).unwrap();
        assert_eq!(big.coeffs()[2], r("q") / (r("1 - q") * r("1 - q^2")));
        let zero = TruncatedSeries::<RatFunc>::zero(4);
        for kind in [QExpKind::Little, QExpKind::Big] {
            assert_eq!(q_exp_sum(kind, &zero, &q).unwrap(), TruncatedSeries::one(4));
        }
        let one = TruncatedSeries::<RatFunc>::one(4);
        assert_eq!(
            q_exp_sum(QExpKind::Little, &one, &q),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn product_forms_agree_with_sums() {
        let t = TruncatedSeries::<RatFunc>::variable(DEFAULT_ORDER);
        for e in [1, -2] {
            let b = QBase::q_pow(e);
            for kind in [QExpKind::Little, QExpKind::Big] {
                assert_eq!(
                    q_exp_sum(kind, &t, &b).unwrap(),
                    q_exp_product_form(kind, &t, &b).unwrap()
                );
            }
        }
    }

    #[test]
    fn physics_exponential() {
        let q = QBase::q();
        let t = TruncatedSeries::<RatFunc>::variable(8);
        let scaled = t.scalar_mul(&(RatFunc::one() - RatFunc::q()));
        let a = exp_q_sum(&t, &q).unwrap();
        assert_eq!(a, q_exp_sum(QExpKind::Little, &scaled, &q).unwrap());
        assert_eq!(a, exp_q_quesne(&t, &q).unwrap());
    }

    #[test]
    fn float_instantiation() {
        let q = QBase::new(0.5f64).unwrap();
        assert!((quesne_c(2, &q).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        let t = TruncatedSeries::<f64>::variable(10);
        let e = q_exp_sum(QExpKind::Little, &t, &q).unwrap();
        let p = q_exp_product_form(QExpKind::Little, &t, &q).unwrap();
        for (a, b) in e.coeffs().iter().zip(p.coeffs()) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(QBase::new(1.0f64), Err(Error::InvalidBase));
    }
}
