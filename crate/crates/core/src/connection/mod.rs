//! Nonlinear connection formulae: each q-polynomial written as a finite sum
//! of products of classical polynomials, indexed by partition solutions.

mod partitions;
mod sympoly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use partitions::{
    laguerre_partitions, partitions_of, LaguerrePartitionSolution, PartitionSolution,
};
pub use sympoly::{
    render_coefficient, render_monomial_latex, render_monomial_text, SymMonomial, SymPoly, Symbol,
};

use crate::error::Result;
use crate::families::{
    self, factorial, gegenbauer_classical, laguerre_classical, CosPolynomial, LaguerreIndex,
    Polynomial, QParams, ZPolynomial,
};
use crate::field::RatFunc;
use crate::qkernel::{q_binomial, q_factorial, q_number, quesne_c, QBase};
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Hermite,
    Laguerre,
    Gegenbauer,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hermite => "hermite",
            Family::Laguerre => "laguerre",
            Family::Gegenbauer => "gegenbauer",
        }
    }
}

/// Which solution a term belongs to.
#[derive(Clone, Debug, PartialEq)]
pub enum Descriptor {
    Partition(PartitionSolution),
    Laguerre(LaguerrePartitionSolution),
    /// Product of classical Gegenbauer polynomials, as a monomial in `C_m`.
    Chebyshev(SymMonomial),
}

#[derive(Clone, Debug, PartialEq)]
pub enum TermCoefficient {
    Field(RatFunc),
    Abstract(SymPoly),
}

/// One classical factor of a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFactor {
    /// `H_degree(ζ_k)`, paired with `τ_k^degree`.
    Hermite { degree: u32, k: u32 },
    /// `L_{index.k}^{(index.alpha)}(c_j(q) z^j)`.
    Laguerre { j: u32, index: LaguerreIndex },
    /// `C_m(z)^power`.
    Gegenbauer { m: u32, power: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum BasisPolynomial {
    Z(ZPolynomial),
    Cos(CosPolynomial),
}

impl BasisPolynomial {
    pub fn scale(&self, c: &RatFunc) -> BasisPolynomial {
        match self {
            BasisPolynomial::Z(p) => BasisPolynomial::Z(p.map(|x| x * c)),
            BasisPolynomial::Cos(p) => BasisPolynomial::Cos(p.map(|x| x * c)),
        }
    }

    pub fn as_z(&self) -> Option<&ZPolynomial> {
        match self {
            BasisPolynomial::Z(p) => Some(p),
            BasisPolynomial::Cos(_) => None,
        }
    }

    pub fn as_cos(&self) -> Option<&CosPolynomial> {
        match self {
            BasisPolynomial::Cos(p) => Some(p),
            BasisPolynomial::Z(_) => None,
        }
    }

    fn plus(&self, other: &BasisPolynomial) -> BasisPolynomial {
        match (self, other) {
            (BasisPolynomial::Z(a), BasisPolynomial::Z(b)) => {
                BasisPolynomial::Z(a.clone() + b.clone())
            }
            (BasisPolynomial::Cos(a), BasisPolynomial::Cos(b)) => {
                BasisPolynomial::Cos(a.clone() + b.clone())
            }
            _ => panic!("mixing z-monomial and cosine bases"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTerm {
    pub descriptor: Descriptor,
    pub coefficient: TermCoefficient,
    pub factors: Vec<ClassicalFactor>,
    pub value: BasisPolynomial,
}

/// A connection formula instance. `total` is the exact sum of the term
/// values; `total · rescale` is the q-polynomial itself.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionExpansion {
    pub family: Family,
    pub n: u32,
    pub k: Option<u32>,
    pub terms: Vec<ConnectionTerm>,
    pub total: BasisPolynomial,
    pub rescale: RatFunc,
}

impl ConnectionExpansion {
    fn from_terms(
        family: Family,
        n: u32,
        k: Option<u32>,
        terms: Vec<ConnectionTerm>,
        rescale: RatFunc,
    ) -> Self {
        let zero = match family {
            Family::Gegenbauer => BasisPolynomial::Cos(CosPolynomial::zero()),
            _ => BasisPolynomial::Z(ZPolynomial::zero()),
        };
        let total = terms.iter().fold(zero, |acc, t| acc.plus(&t.value));
        ConnectionExpansion {
            family,
            n,
            k,
            terms,
            total,
            rescale,
        }
    }

    pub fn rescaled_total(&self) -> BasisPolynomial {
        self.total.scale(&self.rescale)
    }

    /// Contribution of term `i` to the q-polynomial itself.
    pub fn rescaled_value(&self, i: usize) -> BasisPolynomial {
        self.terms[i].value.scale(&self.rescale)
    }
}

/// Rising factorial `(α)_ℓ = α(α+1)⋯(α+ℓ−1)`.
pub fn pochhammer(alpha: &BigRational, l: u32) -> BigRational {
    (0..l).fold(BigRational::one(), |acc, j| {
        acc * (alpha + BigRational::from_integer(BigInt::from(j)))
    })
}

fn rat_field(r: &BigRational) -> RatFunc {
    RatFunc::from_rational(r)
}

/// `(−1)^{k+1} 2^k c_k(q⁻²)` and `(−1)^{k+1} (2/(q[2]_{q⁻²}))^k c_k(q⁻⁴)`:
/// the rational pairings `2ζ_kτ_k = u_k zᵏtᵏ` and `τ_k² = v_k t^{2k}`.
fn hermite_pairings(k: u32) -> Result<(RatFunc, RatFunc)> {
    let b2 = QBase::q_pow(-2);
    let b4 = QBase::q_pow(-4);
    let sign = if k % 2 == 1 {
        RatFunc::one()
    } else {
        -RatFunc::one()
    };
    let u = sign.clone() * RatFunc::from_int(2).powi(k as i64)? * quesne_c(k, &b2)?;
    let w = RatFunc::from_int(2).checked_div(&(RatFunc::q() * q_number(2, &b2)))?;
    let v = sign * w.powi(k as i64)? * quesne_c(k, &b4)?;
    Ok((u, v))
}

/// `H_m(ζ_k) τ_k^m / m!` with the powers of `t` stripped:
/// `Σ_ℓ (−1)^ℓ u^{m−2ℓ} v^ℓ z^{k(m−2ℓ)} / (ℓ! (m−2ℓ)!)`.
fn hermite_factor(k: u32, m: u32, u: &RatFunc, v: &RatFunc) -> Result<ZPolynomial> {
    let mut out = ZPolynomial::zero();
    for l in 0..=m / 2 {
        let d = m - 2 * l;
        let mut c = u.powi(d as i64)? * v.powi(l as i64)?;
        c = c * rat_field(&BigRational::new(
            BigInt::one(),
            factorial(l) * factorial(d),
        ));
        if l % 2 == 1 {
            c = -c;
        }
        out = out + Polynomial::monomial(k * d, c);
    }
    Ok(out)
}

/// Connection formula for `H_n(z;q)` in rationalized form. Each term is
/// one partition `{n_k}` of `n`, with the inner sums already grouped; its
/// coefficient is the explicit `1/∏ n_k!`, and `rescale` is
/// `[n]_{q⁻²}! q^{−n/2}`.
pub fn hermite_connection(n: u32) -> Result<ConnectionExpansion> {
    let mut pairings = BTreeMap::new();
    let mut terms = Vec::new();
    for p in partitions_of(n) {
        let mut value = ZPolynomial::one();
        let mut denom = BigInt::one();
        let mut factors = Vec::new();
        for (&k, &m) in p.parts.iter().rev() {
            if let std::collections::btree_map::Entry::Vacant(e) = pairings.entry(k) {
                e.insert(hermite_pairings(k)?);
            }
            let (u, v) = &pairings[&k];
            value = value * hermite_factor(k, m, u, v)?;
            denom *= factorial(m);
            factors.push(ClassicalFactor::Hermite { degree: m, k });
        }
        terms.push(ConnectionTerm {
            descriptor: Descriptor::Partition(p),
            coefficient: TermCoefficient::Field(rat_field(&BigRational::new(BigInt::one(), denom))),
            factors,
            value: BasisPolynomial::Z(value),
        });
    }
    let rescale = q_factorial(n, &QBase::q_pow(-2)) * RatFunc::s_pow(-(n as i64));
    Ok(ConnectionExpansion::from_terms(
        Family::Hermite,
        n,
        None,
        terms,
        rescale,
    ))
}

fn tri(m: i64) -> i64 {
    m * (m + 1) / 2
}

/// Connection formula for `L_k^{(n−k)}(z;q)` with auxiliary integers
/// `aux[j] = n_j` (missing entries are 0). `total` is
/// `q^{(n−k)(n−k+1)/2} L_k^{(n−k)}(z;q)`.
pub fn laguerre_connection(
    n: u32,
    k: u32,
    aux: &BTreeMap<u32, i64>,
) -> Result<ConnectionExpansion> {
    let q = QBase::q();
    let mut terms = Vec::new();
    for sol in laguerre_partitions(n, k) {
        let mut scalar = BigRational::one();
        let mut value = ZPolynomial::one();
        let mut factors = Vec::new();
        let js: std::collections::BTreeSet<u32> = sol
            .kparts
            .keys()
            .chain(sol.ellparts.keys())
            .copied()
            .collect();
        for j in js {
            let nj = aux.get(&j).copied().unwrap_or(0);
            let lj = sol.ell_at(j);
            let mut c = pochhammer(&BigRational::from_integer(nj.into()), lj)
                / BigRational::from_integer(factorial(lj));
            if lj % 2 == 1 {
                c = -c;
            }
            scalar *= c;
            let kj = sol.k_at(j);
            if kj > 0 {
                let index = LaguerreIndex {
                    k: kj,
                    alpha: nj - kj as i64,
                };
                let arg = Polynomial::monomial(j, quesne_c(j, &q)?);
                value = value * laguerre_classical(index, &arg);
                factors.push(ClassicalFactor::Laguerre { j, index });
            }
        }
        let qpart = RatFunc::q_pow(tri(n as i64 - sol.ell as i64)) * q_binomial(n, sol.ell, &q)?;
        let coeff = rat_field(&scalar) * qpart;
        let value = value.map(|c| c * &coeff);
        terms.push(ConnectionTerm {
            descriptor: Descriptor::Laguerre(sol),
            coefficient: TermCoefficient::Field(coeff),
            factors,
            value: BasisPolynomial::Z(value),
        });
    }
    let rescale = RatFunc::q_pow(-tri(n as i64 - k as i64));
    Ok(ConnectionExpansion::from_terms(
        Family::Laguerre,
        n,
        Some(k),
        terms,
        rescale,
    ))
}

/// `a_k = [t^k] log(1 + Σ_m C_m t^m)` in the abstract symbols `C_m`.
pub fn classical_log_coefficients(order: u32) -> Vec<SymPoly> {
    let g = TruncatedSeries::from_coeffs(
        order as usize,
        std::iter::once(SymPoly::one()).chain((1..=order).map(SymPoly::cheb)),
    );
    g.log().expect("constant term is 1").into_coeffs()
}

/// `[tⁿ] exp(Σ_k w_k a_k t^k)` in the symbols `C_m` and those in `w_k`.
fn exp_weighted(n: u32, weight: impl Fn(u32) -> SymPoly) -> SymPoly {
    let a = classical_log_coefficients(n);
    let series = TruncatedSeries::from_coeffs(
        n as usize,
        a.iter().enumerate().map(|(k, ak)| {
            if k == 0 {
                SymPoly::zero()
            } else {
                weight(k as u32) * ak.clone()
            }
        }),
    );
    series.exp().expect("zero constant term").coeffs()[n as usize].clone()
}

fn is_cheb(s: Symbol) -> bool {
    matches!(s, Symbol::Cheb(_))
}

fn cheb_product(m: &SymMonomial) -> CosPolynomial {
    m.iter().fold(CosPolynomial::one(), |acc, (s, e)| match s {
        Symbol::Cheb(k) => acc * gegenbauer_classical::<RatFunc>(*k).pow_u32(*e),
        _ => acc,
    })
}

/// General-`n` Gegenbauer connection: `C_n^{(λ)}(z;q)` as a sum of products
/// of classical `C_m(z)` with coefficients polynomial in `β_k = [λ]_{q^k}`.
/// Terms are ordered like partitions, `C_n` first and `C_1ⁿ` last.
pub fn gegenbauer_connection(n: u32) -> Result<ConnectionExpansion> {
    let full = exp_weighted(n, SymPoly::beta);
    let grouped = full.split_by(is_cheb);
    let mut keys: Vec<&SymMonomial> = grouped.keys().collect();
    keys.sort_by_key(|m| sympoly::display_key(m));
    let params = QParams::symbolic();
    let mut betas = BTreeMap::new();
    for k in 1..=n {
        betas.insert(k, params.lambda_number(k)?);
    }
    let mut terms = Vec::new();
    for m in keys {
        let coeff = &grouped[m];
        let c = substitute_beta_q(coeff, &betas);
        let value = cheb_product(m).map(|x| x * &c);
        let factors = m
            .iter()
            .filter_map(|(s, e)| match s {
                Symbol::Cheb(k) => Some(ClassicalFactor::Gegenbauer { m: *k, power: *e }),
                _ => None,
            })
            .collect();
        terms.push(ConnectionTerm {
            descriptor: Descriptor::Chebyshev(m.clone()),
            coefficient: TermCoefficient::Abstract(coeff.clone()),
            factors,
            value: BasisPolynomial::Cos(value),
        });
    }
    Ok(ConnectionExpansion::from_terms(
        Family::Gegenbauer,
        n,
        None,
        terms,
        RatFunc::one(),
    ))
}

/// Target of [`substitute_beta`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMode {
    /// `β_k ↦ (1 − Λᵏ)/(1 − qᵏ)`.
    QLambda,
    /// `β_k ↦ λ`.
    ClassicalLambda,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BetaImage {
    Field(RatFunc),
    Lambda(SymPoly),
}

fn substitute_beta_q(coeff: &SymPoly, betas: &BTreeMap<u32, RatFunc>) -> RatFunc {
    coeff.eval(|s| match s {
        Symbol::Beta(k) => betas.get(&k).cloned().unwrap_or_else(|| {
            QParams::symbolic()
                .lambda_number(k)
                .expect("q^k differs from 1")
        }),
        other => panic!("symbol {other:?} has no value in ℚ(s, Λ)"),
    })
}

pub fn substitute_beta(coeff: &SymPoly, mode: BetaMode) -> BetaImage {
    match mode {
        BetaMode::QLambda => BetaImage::Field(substitute_beta_q(coeff, &BTreeMap::new())),
        BetaMode::ClassicalLambda => BetaImage::Lambda(coeff.substitute(|s| match s {
            Symbol::Beta(_) => SymPoly::lambda(),
            other => SymPoly::symbol(other),
        })),
    }
}

/// `[tⁿ] exp(λ Σ a_k t^k)` in the symbols `λ` and `C_m`: the classical
/// connection computed directly, without going through `β_k`.
pub fn classical_lambda_connection(n: u32) -> SymPoly {
    exp_weighted(n, |_| SymPoly::lambda())
}

/// `ℐ_ℓ = [t^ℓ] log(Σ C_m t^m)` as a polynomial in the symbols `C_m`.
pub fn sum_rule_combination(l: u32) -> SymPoly {
    classical_log_coefficients(l)[l as usize].clone()
}

/// Both sides of the sum rule `ℐ_ℓ^{(λ)}(z;q) = [λ]_{q^ℓ} ℐ_ℓ(z)`, each
/// computed through a series logarithm.
pub fn gegenbauer_sum_rule(l: u32) -> Result<(CosPolynomial, CosPolynomial)> {
    let order = l as usize;
    let mut deformed = Vec::with_capacity(order + 1);
    for m in 0..=l {
        deformed.push(families::q_gegenbauer_direct(m)?);
    }
    let lhs = TruncatedSeries::from_coeffs(order, deformed)
        .log()?
        .coeffs()[order]
        .clone();
    let classical =
        TruncatedSeries::from_coeffs(order, (0..=l).map(gegenbauer_classical::<RatFunc>));
    let log_c = classical.log()?.coeffs()[order].clone();
    let beta = QParams::symbolic().lambda_number(l)?;
    Ok((lhs, log_c.map(|c| c * &beta)))
}

/// Evaluates a polynomial in `C_m` with `C_m := f(m)`.
pub fn eval_cheb<C: Coefficient>(p: &SymPoly, f: impl Fn(u32) -> C) -> C {
    p.eval(|s| match s {
        Symbol::Cheb(m) => f(m),
        other => panic!("unexpected symbol {other:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{q_gegenbauer_direct, q_hermite, q_laguerre};
    use crate::scalar::rat;

    fn cheb_mono(parts: &[(u32, u32)]) -> SymMonomial {
        parts.iter().map(|(m, e)| (Symbol::Cheb(*m), *e)).collect()
    }

    #[test]
    fn pochhammer_values() {
        assert!(pochhammer(&rat(7, 3), 0).is_one());
        assert!(pochhammer(&rat(0, 1), 3).is_zero());
        assert_eq!(pochhammer(&rat(3, 1), 2), rat(12, 1));
        assert_eq!(pochhammer(&rat(-2, 1), 2), rat(2, 1));
    }

    #[test]
    fn hermite_totals() {
        assert!(hermite_connection(0)
            .unwrap()
            .rescaled_total()
            .as_z()
            .unwrap()
            .is_one());
        for n in 0..=6 {
            let c = hermite_connection(n).unwrap();
            assert_eq!(
                c.rescaled_total().as_z().unwrap(),
                &q_hermite(n, 12).unwrap(),
                "n={n}"
            );
        }
        assert_eq!(hermite_connection(5).unwrap().terms.len(), 7);
    }

    #[test]
    fn laguerre_totals_do_not_depend_on_aux() {
        let target = q_laguerre(3, 3, 12).unwrap();
        for aux in [
            vec![],
            vec![(1, 2), (2, 1), (3, 3)],
            vec![(1, -3), (2, 0), (3, -1)],
        ] {
            let aux: BTreeMap<u32, i64> = aux.into_iter().collect();
            let c = laguerre_connection(3, 3, &aux).unwrap();
            assert_eq!(c.terms.len(), 18);
            assert_eq!(c.rescaled_total().as_z().unwrap(), &target);
        }
        let k0 = laguerre_connection(4, 0, &BTreeMap::new()).unwrap();
        assert_eq!(
            k0.total.as_z().unwrap(),
            &Polynomial::constant(RatFunc::q_pow(10))
        );
    }

    #[test]
    fn gegenbauer_low_orders() {
        let c1 = gegenbauer_connection(1).unwrap();
        assert_eq!(c1.terms.len(), 1);
        assert_eq!(
            c1.terms[0].coefficient,
            TermCoefficient::Abstract(SymPoly::beta(1))
        );
        let c2 = gegenbauer_connection(2).unwrap();
        let b1 = SymPoly::beta(1);
        let expected = [
            (cheb_mono(&[(2, 1)]), SymPoly::beta(2)),
            (
                cheb_mono(&[(1, 2)]),
                (SymPoly::beta(2) - b1.clone() * b1) * SymPoly::constant(rat(-1, 2)),
            ),
        ];
        for (term, (m, c)) in c2.terms.iter().zip(expected) {
            assert_eq!(term.descriptor, Descriptor::Chebyshev(m));
            assert_eq!(term.coefficient, TermCoefficient::Abstract(c));
        }
        for n in 0..=5 {
            let c = gegenbauer_connection(n).unwrap();
            assert_eq!(c.total.as_cos().unwrap(), &q_gegenbauer_direct(n).unwrap());
        }
    }

    #[test]
    fn beta_substitution() {
        let b1 = SymPoly::beta(1);
        let BetaImage::Field(f) = substitute_beta(&b1, BetaMode::QLambda) else {
            panic!()
        };
        assert_eq!(
            f,
            (RatFunc::one() - RatFunc::lambda()) / (RatFunc::one() - RatFunc::q())
        );
        let d = SymPoly::beta(2) - b1.clone() * b1;
        let BetaImage::Lambda(l) = substitute_beta(&d, BetaMode::ClassicalLambda) else {
            panic!()
        };
        assert_eq!(l, SymPoly::lambda() - SymPoly::lambda() * SymPoly::lambda());
        // at Λ = q every β_k is 1, so only C_n survives
        let c2 = gegenbauer_connection(2).unwrap();
        let at_one: Vec<RatFunc> = c2
            .terms
            .iter()
            .map(|t| match &t.coefficient {
                TermCoefficient::Abstract(p) => match substitute_beta(p, BetaMode::QLambda) {
                    BetaImage::Field(f) => f.subs_lambda(&RatFunc::q()).unwrap(),
                    BetaImage::Lambda(_) => unreachable!(),
                },
                TermCoefficient::Field(_) => unreachable!(),
            })
            .collect();
        assert!(at_one[0].is_one());
        assert!(at_one[1].is_zero());
    }

    #[test]
    fn classical_lambda_matches_beta_collapse() {
        for n in 0..=5 {
            let full = exp_weighted(n, SymPoly::beta);
            let BetaImage::Lambda(collapsed) = substitute_beta(&full, BetaMode::ClassicalLambda)
            else {
                panic!()
            };
            assert_eq!(collapsed, classical_lambda_connection(n));
        }
    }

    #[test]
    fn sum_rules_hold() {
        for l in 1..=4 {
            let (lhs, rhs) = gegenbauer_sum_rule(l).unwrap();
            assert_eq!(lhs, rhs, "l={l}");
        }
        let (lhs, _) = gegenbauer_sum_rule(2).unwrap();
        let beta2 = QParams::symbolic().lambda_number(2).unwrap();
        assert_eq!(lhs, CosPolynomial::cos(2, beta2));
        let i3 = sum_rule_combination(3);
        assert_eq!(i3.coeff(&cheb_mono(&[(1, 3)])), rat(1, 3));
        assert_eq!(i3.coeff(&cheb_mono(&[(1, 1), (2, 1)])), rat(-1, 1));
    }
}
