use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::{self, BPoly};

/// Exponent pair `s^s · Λ^l`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `s`, then the exponent of `Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub s: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { s: 0, l: 0 };

    pub fn new(s: u32, l: u32) -> Self {
        Monomial { s, l }
    }

    pub fn degree(&self) -> u32 {
        self.s + self.l
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.s.cmp(&other.s))
            .then(self.l.cmp(&other.l))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `s` and `Λ` with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by [`Monomial`] order with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// The generator `s` (so that `q = s²`).
    pub fn s() -> Self {
        Self::monomial(Monomial::new(1, 0), 1)
    }

    /// The generator `Λ` standing for `q^λ`.
    pub fn lambda() -> Self {
        Self::monomial(Monomial::new(0, 1), 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut v: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        IntPoly { terms: out }
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<&BigInt> {
        match self.terms.as_slice() {
            [] => None,
            [(m, c)] if *m == Monomial::ONE => Some(c),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.last()
    }

    pub fn degree_s(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.s).max().unwrap_or(0)
    }

    pub fn degree_lambda(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.l).max().unwrap_or(0)
    }

    pub fn contains_lambda(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.l > 0)
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Componentwise minimum exponent over all terms.
    fn min_monomial(&self) -> Monomial {
        let s = self.terms.iter().map(|(m, _)| m.s).min().unwrap_or(0);
        let l = self.terms.iter().map(|(m, _)| m.l).min().unwrap_or(0);
        Monomial::new(s, l)
    }

    fn shift_down(&self, by: Monomial) -> Self {
        IntPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.s - by.s, m.l - by.l), c.clone())),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, by: Monomial) -> Self {
        IntPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.s + by.s, m.l + by.l), c.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub(crate) fn to_dense(&self) -> BPoly {
        let mut out: BPoly = vec![Vec::new(); self.degree_s() as usize + 1];
        for (m, c) in &self.terms {
            let row = &mut out[m.s as usize];
            if row.len() <= m.l as usize {
                row.resize(m.l as usize + 1, BigInt::zero());
            }
            row[m.l as usize] = c.clone();
        }
        dense::b_trim(&mut out);
        out
    }

    pub(crate) fn from_dense(d: &BPoly) -> Self {
        IntPoly::from_terms(d.iter().enumerate().flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(l, c)| (Monomial::new(s as u32, l as u32), c.clone()))
        }))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self` in Z[s, Λ].
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (tm, tc) in &self.terms {
                if tm.s < m.s || tm.l < m.l {
                    return None;
                }
                let (q, r) = tc.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push((Monomial::new(tm.s - m.s, tm.l - m.l), q));
            }
            return Some(IntPoly::from_terms(out));
        }
        dense::b_divexact(&self.to_dense(), &divisor.to_dense()).map(|d| IntPoly::from_dense(&d))
    }

    /// Greatest common divisor in Z[s, Λ], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let ma = self.min_monomial();
        let mb = other.min_monomial();
        let common = Monomial::new(ma.s.min(mb.s), ma.l.min(mb.l));
        let a = self.shift_down(ma);
        let b = other.shift_down(mb);
        let g = if a.is_constant() || b.is_constant() {
            IntPoly::constant(a.content().gcd(&b.content()))
        } else {
            IntPoly::from_dense(&dense::b_gcd(&a.to_dense(), &b.to_dense()))
        };
        g.mul_monomial(common).normalize_sign()
    }

    pub(crate) fn normalize_sign(&self) -> IntPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn eval_complex(&self, s: Complex64, lambda: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                s.powu(m.s) * lambda.powu(m.l) * c
            })
            .sum()
    }

    /// Coefficients in `s` (little-endian), valid only when `Λ` is absent.
    pub(crate) fn s_coefficients(&self) -> Vec<BigInt> {
        debug_assert!(!self.contains_lambda());
        let mut out = vec![BigInt::zero(); self.degree_s() as usize + 1];
        for (m, c) in &self.terms {
            out[m.s as usize] = c.clone();
        }
        out
    }
}

fn merge(a: &IntPoly, b: &IntPoly, negate_b: bool) -> IntPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let ord = match (a.terms.get(i), b.terms.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (m, c) = &b.terms[j];
                out.push((*m, if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a.terms[i].1 - &b.terms[j].1
                } else {
                    &a.terms[i].1 + &b.terms[j].1
                };
                if !c.is_zero() {
                    out.push((a.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    IntPoly { terms: out }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        if let Some((m, c)) = rhs.as_monomial() {
            return self.mul_monomial(m).scale(c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return rhs.mul_monomial(m).scale(c);
        }
        IntPoly::from_dense(&dense::b_mul(&self.to_dense(), &rhs.to_dense()))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $f(self, rhs: IntPoly) -> IntPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", super::text::render_poly(self))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> IntPoly {
        IntPoly::s().pow(2)
    }

    #[test]
    fn ordering_is_graded_lex() {
        let mut v = vec![
            Monomial::new(0, 2),
            Monomial::new(3, 0),
            Monomial::new(1, 1),
            Monomial::new(2, 0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0),
                Monomial::new(3, 0)
            ]
        );
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let p = &(&IntPoly::one() + &q()) * &(&IntPoly::one() - &q());
        let expect = &IntPoly::one() - &q().pow(2);
        assert_eq!(p, expect);
        assert!((&p - &expect).is_zero());
    }

    #[test]
    fn gcd_with_monomial_and_constant_parts() {
        let a = (&IntPoly::one() - &q())
            .mul_monomial(Monomial::new(3, 1))
            .scale(&6.into());
        let b = (&IntPoly::one() - &q().pow(2))
            .mul_monomial(Monomial::new(1, 2))
            .scale(&4.into());
        let g = a.gcd(&b);
        // 2 s Λ (q - 1)
        let expect = (&q() - &IntPoly::one())
            .mul_monomial(Monomial::new(1, 1))
            .scale(&2.into());
        assert_eq!(g, expect);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&IntPoly::s() + &IntPoly::lambda()) * &(&q() - &IntPoly::constant(3));
        let b = &IntPoly::s() + &IntPoly::lambda();
        assert_eq!(a.div_exact(&b), Some(&q() - &IntPoly::constant(3)));
        assert_eq!(a.div_exact(&(&IntPoly::s() - &IntPoly::lambda())), None);
    }
}
