//! Rendering and parsing of field elements in `q`, `q^{1/2}` and `q^{λ}`
//! notation. The generator `s` never appears in output: `s^a` prints as
//! `q^{a/2}` and `Λ^b` as `q^{bλ}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::{IntPoly, Monomial};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn q_factor(s_exp: i64) -> String {
    match s_exp {
        0 => String::new(),
        2 => "q".to_string(),
        e if e % 2 == 0 => format!("q^{{{}}}", e / 2),
        e => format!("q^{{{e}/2}}"),
    }
}

fn lambda_symbol(style: Style) -> &'static str {
    match style {
        Style::Text => "λ",
        Style::Latex => "\\lambda",
    }
}

fn lambda_multiple(l_exp: i64, style: Style) -> String {
    let sym = lambda_symbol(style);
    match l_exp {
        1 => sym.to_string(),
        -1 => format!("-{sym}"),
        e => format!("{e}{sym}"),
    }
}

fn half_integer(a: i64) -> String {
    if a % 2 == 0 {
        (a / 2).abs().to_string()
    } else {
        format!("{}/2", a.abs())
    }
}

/// `q^{a/2} · q^{bλ}` as one factor: `q^{λ+1}`, `q^{2λ-1/2}`, `q`, `q^{-λ}`.
fn monomial_factor(s_exp: i64, l_exp: i64, style: Style) -> String {
    match (s_exp, l_exp) {
        (a, 0) => q_factor(a),
        (0, b) => format!("q^{{{}}}", lambda_multiple(b, style)),
        (a, b) => {
            let sign = if a < 0 { '-' } else { '+' };
            format!(
                "q^{{{}{sign}{}}}",
                lambda_multiple(b, style),
                half_integer(a)
            )
        }
    }
}

/// A signed-exponent term `c · s^a · Λ^b`.
pub(crate) type LaurentTerm = (i64, i64, BigInt);

/// Renders a sum of Laurent terms, highest power of `q^λ` first, then
/// highest power of `q`.
pub(crate) fn render_laurent(mut terms: Vec<LaurentTerm>, style: Style) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|t| std::cmp::Reverse((t.1, t.0)));
    let mut out = String::new();
    for (i, (a, b, c)) in terms.iter().enumerate() {
        let factors = monomial_factor(*a, *b, style);
        let mag = c.abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            factors
        } else {
            format!("{mag}{factors}")
        };
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn poly_terms(p: &IntPoly, shift: Monomial) -> Vec<LaurentTerm> {
    p.terms()
        .iter()
        .map(|(m, c)| {
            (
                m.s as i64 - shift.s as i64,
                m.l as i64 - shift.l as i64,
                c.clone(),
            )
        })
        .collect()
}

pub fn render_poly(p: &IntPoly) -> String {
    render_poly_styled(p, Style::Text)
}

pub fn render_poly_styled(p: &IntPoly, style: Style) -> String {
    render_laurent(poly_terms(p, Monomial::ONE), style)
}

fn wrap(s: String, multi: bool) -> String {
    if multi {
        format!("({s})")
    } else {
        s
    }
}

fn fraction(num: String, num_multi: bool, den: String, den_multi: bool, style: Style) -> String {
    match style {
        Style::Text => format!("{}/{}", wrap(num, num_multi), wrap(den, den_multi)),
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// Whether the rendering of `r` is a single signed term (needs no brackets
/// when used as a coefficient).
pub fn is_single_term(r: &RatFunc) -> bool {
    r.numer().terms().len() <= 1 && (r.denom().as_monomial().is_some())
}

pub fn render_ratfunc(r: &RatFunc, style: Style) -> String {
    let num = r.numer();
    let den = r.denom();
    if den.is_one() {
        return render_poly_styled(num, style);
    }
    if let Some((m, c)) = den.as_monomial() {
        let laurent = render_laurent(poly_terms(num, m), style);
        if c.is_one() {
            return laurent;
        }
        return fraction(laurent, num.terms().len() > 1, c.to_string(), false, style);
    }
    fraction(
        render_poly_styled(num, style),
        num.terms().len() > 1,
        render_poly_styled(den, style),
        den.terms().len() > 1,
        style,
    )
}

fn top_level_slash(s: &str) -> Result<Option<usize>> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '/' if depth == 0 => {
                if found.is_some() {
                    return Err(Error::Parse(format!("more than one '/' in {s:?}")));
                }
                found = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    Ok(found)
}

/// Parses the text (or LaTeX `\frac`-free) form produced by [`render_ratfunc`].
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let s = s.trim();
    match top_level_slash(s)? {
        Some(i) => {
            let num = parse_laurent(&s[..i])?;
            let den = parse_laurent(&s[i + 1..])?;
            num.checked_div(&den)
        }
        None => parse_laurent(s),
    }
}

/// Parses a polynomial with non-negative exponents.
pub fn parse_poly(s: &str) -> Result<IntPoly> {
    let r = parse_laurent(s)?;
    if !r.denom().is_one() {
        return Err(Error::Parse(format!("{s:?} is not a polynomial")));
    }
    Ok(r.numer().clone())
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        if top_level_slash(inner).is_ok() {
            return inner.trim();
        }
    }
    t
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.chars.peek().copied().filter(char::is_ascii_digit) {
            out.push(c);
            self.chars.next();
        }
        out
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in {:?}", self.src))
    }
}

fn parse_half_integer(body: &str, src: &str) -> Result<i64> {
    let bad = || Error::Parse(format!("bad exponent {body:?} in {src:?}"));
    let body = body.trim();
    if let Some(num) = body.strip_suffix("/2") {
        num.trim().parse::<i64>().map_err(|_| bad())
    } else {
        body.parse::<i64>().map(|a| 2 * a).map_err(|_| bad())
    }
}

/// `(a, b)` for an exponent `bλ ± a/2`, `a/2`, or `bλ`.
fn parse_exponent(body: &str, src: &str) -> Result<(i64, i64)> {
    let body = body.trim();
    let split = body
        .find("\\lambda")
        .map(|i| (i, "\\lambda".len()))
        .or_else(|| body.find('λ').map(|i| (i, 'λ'.len_utf8())));
    let Some((i, len)) = split else {
        return Ok((parse_half_integer(body, src)?, 0));
    };
    let b = match body[..i].trim() {
        "" => 1,
        "-" => -1,
        m => m
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad λ exponent {body:?} in {src:?}")))?,
    };
    let rest = body[i + len..].trim();
    let a = if rest.is_empty() {
        0
    } else if let Some(r) = rest.strip_prefix('+') {
        parse_half_integer(r, src)?
    } else if rest.starts_with('-') {
        parse_half_integer(rest, src)?
    } else {
        return Err(Error::Parse(format!("bad exponent {body:?} in {src:?}")));
    };
    Ok((a, b))
}

fn parse_laurent(s: &str) -> Result<RatFunc> {
    let s = strip_parens(s);
    let mut cur = Cursor {
        chars: s.chars().peekable(),
        src: s,
    };
    let mut acc = RatFunc::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.chars.peek().is_none() {
            if first {
                return Err(cur.err("empty expression"));
            }
            break;
        }
        let mut negative = false;
        match cur.chars.peek() {
            Some('+') | Some('-') | Some('−') => {
                negative = cur.chars.next() != Some('+');
                cur.skip_ws();
            }
            _ if !first => return Err(cur.err("expected '+' or '-'")),
            _ => {}
        }
        let digits = cur.digits();
        let mut coeff: BigInt = if digits.is_empty() {
            BigInt::one()
        } else {
            digits.parse().map_err(|_| cur.err("bad integer"))?
        };
        if negative {
            coeff = -coeff;
        }
        let (mut a, mut b) = (0i64, 0i64);
        let mut saw_factor = !digits.is_empty();
        while cur.chars.peek() == Some(&'q') {
            cur.chars.next();
            saw_factor = true;
            if cur.chars.peek() == Some(&'^') {
                cur.chars.next();
                let body = if cur.chars.peek() == Some(&'{') {
                    cur.chars.next();
                    let mut body = String::new();
                    loop {
                        match cur.chars.next() {
                            Some('}') => break,
                            Some(c) => body.push(c),
                            None => return Err(cur.err("unterminated exponent")),
                        }
                    }
                    body
                } else {
                    let mut body = String::new();
                    if cur.chars.peek() == Some(&'-') {
                        body.push('-');
                        cur.chars.next();
                    }
                    body.push_str(&cur.digits());
                    body
                };
                let (da, db) = parse_exponent(&body, s)?;
                a += da;
                b += db;
            } else {
                a += 2;
            }
        }
        if !saw_factor {
            return Err(cur.err("expected a term"));
        }
        let mut term = RatFunc::from_poly(IntPoly::constant(coeff)) * RatFunc::s_pow(a);
        let lam = RatFunc::lambda_pow(b.unsigned_abs() as u32);
        term = if b >= 0 {
            term * lam
        } else {
            term.checked_div(&lam)?
        };
        acc = acc + term;
        first = false;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Coefficient};

    #[test]
    fn half_integer_powers_render_in_q() {
        let x = RatFunc::s_pow(-45);
        assert_eq!(render_ratfunc(&x, Style::Latex), "q^{-45/2}");
        assert_eq!(render_ratfunc(&x, Style::Text), "q^{-45/2}");
        assert_eq!(render_ratfunc(&RatFunc::s(), Style::Text), "q^{1/2}");
    }

    #[test]
    fn lambda_powers() {
        let x = RatFunc::lambda_pow(3) - RatFunc::q();
        assert_eq!(render_ratfunc(&x, Style::Text), "q^{3λ} - q");
        assert_eq!(render_ratfunc(&x, Style::Latex), "q^{3\\lambda} - q");
        assert_eq!(parse_ratfunc("q^{3λ} - q").unwrap(), x);
        let mixed = RatFunc::lambda_pow(2) * RatFunc::s_pow(-1) - RatFunc::lambda() * RatFunc::q();
        assert_eq!(render_ratfunc(&mixed, Style::Text), "q^{2λ-1/2} - q^{λ+1}");
        assert_eq!(
            render_ratfunc(&mixed, Style::Latex),
            "q^{2\\lambda-1/2} - q^{\\lambda+1}"
        );
        assert_eq!(parse_ratfunc("q^{2λ-1/2} - q^{λ+1}").unwrap(), mixed);
        assert_eq!(
            parse_ratfunc("q^{2\\lambda-1/2} - q^{\\lambda+1}").unwrap(),
            mixed
        );
    }

    #[test]
    fn fractions_roundtrip() {
        let one = RatFunc::one();
        let q = RatFunc::q();
        let c2 = (&one - &q) / (RatFunc::from_int(2) * (&one + &q));
        let text = render_ratfunc(&c2, Style::Text);
        assert_eq!(text, "(-q + 1)/(2q + 2)");
        assert_eq!(parse_ratfunc(&text).unwrap(), c2);
        let half = RatFunc::from_rational(&rat(-1, 2));
        assert_eq!(render_ratfunc(&half, Style::Text), "-1/2");
        assert_eq!(parse_ratfunc("-1/2").unwrap(), half);
        assert_eq!(render_ratfunc(&half, Style::Latex), "\\frac{-1}{2}");
    }

    #[test]
    fn laurent_over_integer() {
        let x = (RatFunc::s_pow(-3) + RatFunc::one()) / RatFunc::from_int(3);
        let text = render_ratfunc(&x, Style::Text);
        assert_eq!(text, "(1 + q^{-3/2})/3");
        assert_eq!(parse_ratfunc(&text).unwrap(), x);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("q^{x}").is_err());
        assert!(parse_ratfunc("1 q").is_err());
        assert!(parse_ratfunc("(1").is_err());
        assert!(parse_poly("q^{-1}").is_err());
    }
}
