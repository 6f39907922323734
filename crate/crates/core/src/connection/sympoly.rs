//! Polynomials with exact rational coefficients in abstract symbols:
//! `β_k` (standing for `[λ]_{q^k}`), classical Gegenbauer `C_m`, and `λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Algebra, Coefficient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Beta(u32),
    Cheb(u32),
    Lambda,
}

impl Symbol {
    fn index(self) -> u32 {
        match self {
            Symbol::Beta(k) | Symbol::Cheb(k) => k,
            Symbol::Lambda => 0,
        }
    }
}

/// Product of symbol powers; the empty map is 1.
pub type SymMonomial = BTreeMap<Symbol, u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymPoly {
    terms: BTreeMap<SymMonomial, BigRational>,
}

impl SymPoly {
    pub fn symbol(s: Symbol) -> Self {
        Self::monomial(BTreeMap::from([(s, 1)]), BigRational::one())
    }

    pub fn beta(k: u32) -> Self {
        Self::symbol(Symbol::Beta(k))
    }

    pub fn cheb(m: u32) -> Self {
        Self::symbol(Symbol::Cheb(m))
    }

    pub fn lambda() -> Self {
        Self::symbol(Symbol::Lambda)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(SymMonomial::new(), c)
    }

    pub fn monomial(m: SymMonomial, c: BigRational) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (SymMonomial, BigRational)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: SymMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let m: SymMonomial = m.into_iter().filter(|(_, e)| *e > 0).collect();
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SymMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&SymMonomial::new()).cloned(),
            _ => None,
        }
    }

    /// Evaluates every symbol through `f`.
    pub fn eval<C: Coefficient>(&self, mut f: impl FnMut(Symbol) -> C) -> C {
        let mut cache: BTreeMap<Symbol, C> = BTreeMap::new();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut term = C::from_rational(c);
            for (s, e) in m {
                let v = cache.entry(*s).or_insert_with(|| f(*s));
                term = term * v.pow_u32(*e);
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes a polynomial for every symbol.
    pub fn substitute(&self, f: impl FnMut(Symbol) -> SymPoly) -> SymPoly {
        self.eval(f)
    }

    /// Groups terms by the part of each monomial whose symbols satisfy
    /// `pred`; the remaining factors form the coefficient.
    pub fn split_by(&self, pred: impl Fn(Symbol) -> bool) -> BTreeMap<SymMonomial, SymPoly> {
        let mut out: BTreeMap<SymMonomial, SymPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest): (SymMonomial, SymMonomial) = m.iter().partition(|(s, _)| pred(**s));
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Monomials in display order: largest symbol indices first, compared
    /// as partitions; powers of `λ` ascending.
    pub fn display_order(&self) -> Vec<(&SymMonomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|a| display_key(a.0));
        v
    }

    /// Positive rational content and the primitive part, signed so that
    /// the first monomial in display order has a positive coefficient.
    pub fn content_and_primitive(&self) -> (BigRational, SymPoly) {
        let Some((_, first)) = self
            .display_order()
            .first()
            .map(|(m, c)| ((*m).clone(), (*c).clone()))
        else {
            return (BigRational::zero(), SymPoly::default());
        };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = BigRational::new(num, den);
        if first.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.map_coeffs(|c| c * &inv))
    }

    fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> SymPoly {
        SymPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

/// Sort key placing `β₅` before `β₁β₄` before `β₂β₃` … before `β₁⁵`.
pub(crate) fn display_key(m: &SymMonomial) -> (std::cmp::Reverse<Vec<u32>>, u32) {
    let mut parts: Vec<u32> = Vec::new();
    let mut lam = 0;
    for (s, e) in m {
        if *s == Symbol::Lambda {
            lam = *e;
        } else {
            parts.extend(std::iter::repeat_n(s.index(), *e as usize));
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    (std::cmp::Reverse(parts), lam)
}

impl Zero for SymPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SymPoly {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Add for SymPoly {
    type Output = SymPoly;
    fn add(mut self, rhs: SymPoly) -> SymPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: SymPoly) -> SymPoly {
        self + (-rhs)
    }
}

impl Mul for SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: SymPoly) -> SymPoly {
        let mut out = SymPoly::default();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                let mut m = ma.clone();
                for (s, e) in mb {
                    *m.entry(*s).or_insert(0) += e;
                }
                out.add_term(m, a * b);
            }
        }
        out
    }
}

impl Coefficient for SymPoly {
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(r.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
}

impl Algebra<BigRational> for SymPoly {
    fn scale(&self, k: &BigRational) -> Self {
        self.map_coeffs(|c| c * k)
    }

    fn embed(k: &BigRational) -> Self {
        Self::constant(k.clone())
    }
}

fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Text form of a monomial, e.g. `β₁²β₃` or `C₁C₂²`; empty for 1.
pub fn render_monomial_text(m: &SymMonomial) -> String {
    let mut items: Vec<(&Symbol, &u32)> = m.iter().collect();
    items.sort_by_key(|(s, _)| (matches!(s, Symbol::Cheb(_)), s.index()));
    items
        .into_iter()
        .map(|(s, e)| {
            let base = match s {
                Symbol::Beta(k) => format!("β{}", subscript(*k)),
                Symbol::Cheb(k) => format!("C{}", subscript(*k)),
                Symbol::Lambda => "λ".to_string(),
            };
            if *e == 1 {
                base
            } else {
                format!("{base}{}", superscript(*e))
            }
        })
        .collect()
}

/// LaTeX form of a monomial, `[\lambda]_{q}^{2}[\lambda]_{q^{3}}` style.
pub fn render_monomial_latex(m: &SymMonomial) -> String {
    let mut items: Vec<(&Symbol, &u32)> = m.iter().collect();
    items.sort_by_key(|(s, _)| (matches!(s, Symbol::Cheb(_)), s.index()));
    let parts: Vec<String> = items
        .into_iter()
        .map(|(s, e)| {
            let pow = if *e == 1 {
                String::new()
            } else {
                format!("^{{{e}}}")
            };
            match s {
                Symbol::Beta(1) => format!("[\\lambda]_{{q}}{pow}"),
                Symbol::Beta(k) => format!("[\\lambda]_{{q^{{{k}}}}}{pow}"),
                Symbol::Cheb(k) => format!("C_{{{k}}}{pow}(z)"),
                Symbol::Lambda => format!("\\lambda{pow}"),
            }
        })
        .collect();
    parts.join("\\,")
}

/// Renders a positive rational, using a vulgar-fraction glyph when one
/// exists.
pub(crate) fn render_fraction_text(r: &BigRational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let glyph = match (
        r.numer().to_string().as_str(),
        r.denom().to_string().as_str(),
    ) {
        ("1", "2") => Some("½"),
        ("1", "3") => Some("⅓"),
        ("2", "3") => Some("⅔"),
        ("1", "4") => Some("¼"),
        ("3", "4") => Some("¾"),
        ("1", "5") => Some("⅕"),
        ("1", "6") => Some("⅙"),
        ("1", "8") => Some("⅛"),
        _ => None,
    };
    match glyph {
        Some(g) => g.to_string(),
        None => format!("({}/{})", r.numer(), r.denom()),
    }
}

fn render_fraction_latex(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Renders a sum compactly (`β₂−β₁²`), leading sign included only when
/// negative.
fn render_sum(p: &SymPoly, latex: bool) -> String {
    let mut out = String::new();
    for (i, (m, c)) in p.display_order().into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        let mono = if latex {
            render_monomial_latex(m)
        } else {
            render_monomial_text(m)
        };
        let coeff = if mono.is_empty() || !mag.is_one() {
            if latex {
                render_fraction_latex(&mag)
            } else {
                render_fraction_text(&mag)
            }
        } else {
            String::new()
        };
        let sep = match (i, neg, latex) {
            (0, true, _) => "-",
            (0, false, _) => "",
            (_, true, false) => "−",
            (_, false, false) => "+",
            (_, true, true) => " - ",
            (_, false, true) => " + ",
        };
        out.push_str(sep);
        out.push_str(&coeff);
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A coefficient in factored display form: sign, content and primitive
/// part, e.g. `−½(β₂−β₁²)`. The sign is returned separately.
pub fn render_coefficient(p: &SymPoly, latex: bool) -> (bool, String) {
    if p.is_zero() {
        return (false, "0".into());
    }
    let (content, prim) = p.content_and_primitive();
    let negative = content.is_negative();
    let mag = content.abs();
    let frac = |r: &BigRational| {
        if latex {
            render_fraction_latex(r)
        } else {
            render_fraction_text(r)
        }
    };
    if let Some(c) = prim.as_constant() {
        return (negative, frac(&(mag * c)));
    }
    let inner = render_sum(&prim, latex);
    let body = if prim.len() == 1 {
        inner
    } else if latex {
        format!("\\left({inner}\\right)")
    } else {
        format!("({inner})")
    };
    if mag.is_one() {
        (negative, body)
    } else {
        (negative, format!("{}{body}", frac(&mag)))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn arithmetic() {
        let b1 = SymPoly::beta(1);
        let b2 = SymPoly::beta(2);
        let x = (b2.clone() - b1.clone() * b1.clone()) * SymPoly::constant(rat(-1, 2));
        assert_eq!(x.len(), 2);
        let y = x.clone() + x.clone().neg();
        assert!(y.is_zero());
        let lam = x.substitute(|_| SymPoly::lambda());
        let expected = (SymPoly::lambda() * SymPoly::lambda() - SymPoly::lambda())
            * SymPoly::constant(rat(1, 2));
        assert_eq!(lam, expected);
    }

    #[test]
    fn factored_rendering() {
        let b1 = SymPoly::beta(1);
        let b2 = SymPoly::beta(2);
        let x = (b2.clone() - b1.clone() * b1.clone()) * SymPoly::constant(rat(-1, 2));
        assert_eq!(
            render_coefficient(&x, false),
            (true, "½(β₂−β₁²)".to_string())
        );
        assert_eq!(render_coefficient(&b2, false), (false, "β₂".to_string()));
        let sq = b1.clone() * b1;
        assert_eq!(
            render_monomial_latex(sq.terms().next().unwrap().0),
            "[\\lambda]_{q}^{2}"
        );
        let odd = SymPoly::constant(rat(1, 120))
            * (SymPoly::beta(5) * SymPoly::constant(rat(24, 1))
                + sq.clone() * sq.clone() * SymPoly::beta(1));
        assert_eq!(render_coefficient(&odd, false).1, "(1/120)(24β₅+β₁⁵)");
    }

    #[test]
    fn display_order_follows_partitions() {
        let p = SymPoly::beta(1).pow_u32(5)
            + SymPoly::beta(2) * SymPoly::beta(3)
            + SymPoly::beta(5)
            + SymPoly::beta(1) * SymPoly::beta(4);
        let order: Vec<String> = p
            .display_order()
            .into_iter()
            .map(|(m, _)| render_monomial_text(m))
            .collect();
        assert_eq!(order, ["β₅", "β₁β₄", "β₂β₃", "β₁⁵"]);
    }

    #[test]
    fn grouping() {
        let p = SymPoly::beta(2) * SymPoly::cheb(2)
            + SymPoly::beta(1) * SymPoly::cheb(1) * SymPoly::cheb(1);
        let g = p.split_by(|s| matches!(s, Symbol::Cheb(_)));
        assert_eq!(g.len(), 2);
        assert_eq!(g[&BTreeMap::from([(Symbol::Cheb(2), 1)])], SymPoly::beta(2));
    }
}
