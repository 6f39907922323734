//! Text and LaTeX rendering of polynomials and connection expansions.

use num_traits::{One, Zero};

use crate::connection::{
    render_coefficient, render_monomial_latex, render_monomial_text, BasisPolynomial,
    ConnectionExpansion, Descriptor, Family, TermCoefficient,
};
use crate::error::Result;
use crate::families::{q_laguerre, CosPolynomial, Polynomial, ZPolynomial};
use crate::field::text::{is_single_term, render_ratfunc};
use crate::field::{RatFunc, Style};
use crate::qkernel::{q_binomial, q_factorial, QBase};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

fn style(latex: bool) -> Style {
    if latex {
        Style::Latex
    } else {
        Style::Text
    }
}

/// A coefficient that renders as a single signed Laurent term.
fn is_atomic(c: &RatFunc) -> bool {
    is_single_term(c) && c.denom().as_monomial().is_some_and(|(_, k)| k.is_one())
}

/// `c · basis`, with the sign of an atomic coefficient pulled to the front.
fn scaled_term(c: &RatFunc, basis: &str, latex: bool) -> String {
    let s = render_ratfunc(c, style(latex));
    if basis.is_empty() {
        return s;
    }
    if is_atomic(c) {
        return match s.as_str() {
            "1" => basis.to_string(),
            "-1" => format!("-{basis}"),
            _ if s
                .trim_start_matches('-')
                .chars()
                .all(|ch| ch.is_ascii_digit()) =>
            {
                format!("{s}{basis}")
            }
            _ => format!("{s} {basis}"),
        };
    }
    if latex {
        format!("\\left({s}\\right) {basis}")
    } else {
        format!("({s}) {basis}")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn power_basis(var: &str, d: u32, latex: bool) -> String {
    match (d, latex) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (d, true) => format!("{var}^{{{d}}}"),
        (d, false) => format!("{var}^{d}"),
    }
}

/// Lowest degree first, for truncated series.
pub fn render_series(p: &ZPolynomial, var: &str, latex: bool) -> String {
    join_terms(
        p.terms()
            .map(|(d, c)| scaled_term(c, &power_basis(var, d, latex), latex))
            .collect(),
    )
}

/// Highest degree first, e.g. `32q^{-45/2} z^5 - … + …`.
pub fn render_polynomial(p: &ZPolynomial, var: &str, latex: bool) -> String {
    join_terms(
        p.terms()
            .rev()
            .map(|(d, c)| scaled_term(c, &power_basis(var, d, latex), latex))
            .collect(),
    )
}

fn cos_basis(m: u32, latex: bool) -> String {
    match (m, latex) {
        (0, _) => String::new(),
        (1, true) => "\\cos\\theta".to_string(),
        (m, true) => format!("\\cos {m}\\theta"),
        (1, false) => "cos(θ)".to_string(),
        (m, false) => format!("cos({m}θ)"),
    }
}

/// Highest frequency first, e.g. `(…) cos(2θ) + …`.
pub fn render_cos(p: &CosPolynomial, latex: bool) -> String {
    join_terms(
        p.terms()
            .rev()
            .map(|(m, c)| scaled_term(c, &cos_basis(m, latex), latex))
            .collect(),
    )
}

pub fn render_basis(p: &BasisPolynomial, latex: bool) -> String {
    match p {
        BasisPolynomial::Z(z) => render_polynomial(z, "z", latex),
        BasisPolynomial::Cos(c) => render_cos(c, latex),
    }
}

fn bracket_binomial(n: u32, l: u32) -> String {
    format!("\\begin{{bmatrix}}{n}\\\\{l}\\end{{bmatrix}}_{{q}}")
}

/// `L_k^{(n−k)}(z;q)` in LaTeX as `Σ_ℓ (−1)^ℓ q^{ℓ(ℓ+α)} [n, ℓ+α]_q z^ℓ/[ℓ]_q!`
/// with bracketed q-binomials. The structured form is checked against the
/// exact polynomial first; if they differ, the plain form is returned.
pub fn laguerre_latex(n: u32, k: u32) -> Result<String> {
    let exact = q_laguerre(n, k, k as usize)?;
    let q = QBase::q();
    let alpha = n as i64 - k as i64;
    let mut check = ZPolynomial::zero();
    let mut terms = Vec::new();
    for l in 0..=k {
        let top = l as i64 + alpha;
        if top < 0 || top > n as i64 {
            continue;
        }
        let top = top as u32;
        let qexp = l as i64 * (l as i64 + alpha);
        let binom = q_binomial(n, top, &q)?;
        let mut c = RatFunc::q_pow(qexp) * binom / q_factorial(l, &q);
        if l % 2 == 1 {
            c = -c;
        }
        check = check + Polynomial::monomial(l, c);
        let mut parts = Vec::new();
        match qexp {
            0 => {}
            1 => parts.push("q".to_string()),
            e => parts.push(format!("q^{{{e}}}")),
        }
        if l >= 2 {
            parts.push(format!("\\frac{{1}}{{[{l}]_{{q}}!}}"));
        }
        if top != 0 && top != n {
            parts.push(bracket_binomial(n, top));
        }
        let body = parts.join("\\,");
        let zpart = power_basis("z", l, true);
        let term = match (body.is_empty(), zpart.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => zpart,
            (false, true) => body,
            (false, false) => format!("{body}\\, {zpart}"),
        };
        terms.push(if l % 2 == 1 { format!("-{term}") } else { term });
    }
    if check != exact {
        return Ok(render_polynomial(&exact, "z", true));
    }
    Ok(join_terms(terms))
}

/// `β₂·C₂ − ½(β₂−β₁²)·C₁²` (text) or the `[\lambda]_{q^k}` LaTeX form.
pub fn render_gegenbauer_connection(c: &ConnectionExpansion, latex: bool) -> String {
    let mut out = String::new();
    for (i, t) in c.terms.iter().enumerate() {
        let (TermCoefficient::Abstract(coef), Descriptor::Chebyshev(mono)) =
            (&t.coefficient, &t.descriptor)
        else {
            continue;
        };
        let (neg, body) = render_coefficient(coef, latex);
        let mono = if latex {
            render_monomial_latex(mono)
        } else {
            render_monomial_text(mono)
        };
        let term = match (mono.is_empty(), body.as_str()) {
            (true, _) => body,
            (false, "1") => mono,
            (false, _) if latex => format!("{body}\\, {mono}"),
            (false, _) => format!("{body}·{mono}"),
        };
        let sep = match (i, neg, latex) {
            (0, false, _) => "",
            (0, true, true) => "-",
            (0, true, false) => "−",
            (_, true, true) => " - ",
            (_, false, _) => " + ",
            (_, true, false) => " − ",
        };
        out.push_str(sep);
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn descriptor_label(d: &Descriptor) -> String {
    match d {
        Descriptor::Partition(p) => p.to_string(),
        Descriptor::Laguerre(s) => s.to_string(),
        Descriptor::Chebyshev(m) => {
            let s = render_monomial_text(m);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        }
    }
}

fn lhs_label(c: &ConnectionExpansion) -> String {
    match c.family {
        Family::Hermite => format!("H_{}(z;q)", c.n),
        Family::Laguerre => {
            let k = c.k.unwrap_or(0);
            format!("L_{k}^({})(z;q)", c.n as i64 - k as i64)
        }
        Family::Gegenbauer => format!("C_{}^(λ)(z;q)", c.n),
    }
}

/// Per-term table (contribution of each solution to the q-polynomial)
/// followed by the summed total.
pub fn render_connection_text(c: &ConnectionExpansion, check: bool) -> String {
    let mut out = String::new();
    if c.family == Family::Gegenbauer {
        out.push_str(&format!(
            "{} = {}\n",
            lhs_label(c),
            render_gegenbauer_connection(c, false)
        ));
    }
    let labels: Vec<String> = c
        .terms
        .iter()
        .map(|t| descriptor_label(&t.descriptor))
        .collect();
    let width = labels
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0)
        .max("solution".len());
    out.push_str(&format!(
        "{:<width$} | contribution to {}\n",
        "solution",
        lhs_label(c)
    ));
    out.push_str(&format!("{}-+-{}\n", "-".repeat(width), "-".repeat(30)));
    for (i, label) in labels.iter().enumerate() {
        let v = render_basis(&c.rescaled_value(i), false);
        out.push_str(&format!("{label:<width$} | {v}\n"));
    }
    out.push_str(&format!(
        "{} = {}\n",
        lhs_label(c),
        render_basis(&c.rescaled_total(), false)
    ));
    out.push_str(&format!("terms: {}\n", c.terms.len()));
    out.push_str(&format!("check: {}\n", if check { "pass" } else { "fail" }));
    out
}

pub fn render_connection_latex(c: &ConnectionExpansion) -> String {
    if c.family == Family::Gegenbauer {
        return format!(
            "C_{{{}}}^{{(\\lambda)}}(z;q) = {}",
            c.n,
            render_gegenbauer_connection(c, true)
        );
    }
    let mut rows = Vec::new();
    for (i, t) in c.terms.iter().enumerate() {
        rows.push(format!(
            "{} & {} \\\\",
            descriptor_label(&t.descriptor),
            render_basis(&c.rescaled_value(i), true)
        ));
    }
    format!(
        "\\begin{{tabular}}{{c||c}}\n{}\n\\end{{tabular}}\n{}",
        rows.join("\n"),
        render_basis(&c.rescaled_total(), true)
    )
}
