//! JSON documents for polynomials and connection expansions.
//!
//! Each coefficient is stored as a canonical numerator/denominator pair of
//! polynomials in `q^{1/2}` and `q^λ`, so parsing a document recovers the
//! exact field element and re-rendering reproduces the same bytes.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::connection::{BasisPolynomial, ConnectionExpansion, Descriptor, TermCoefficient};
use crate::error::{Error, Result};
use crate::families::{CosPolynomial, ZPolynomial};
use crate::field::text::{parse_poly, render_poly};
use crate::field::RatFunc;

use super::render::render_gegenbauer_connection;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    /// `"z"` for powers of `z`, `"cos"` for `cos(mθ)`.
    pub basis: String,
    pub degree_or_m: u32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub family: String,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub coefficients: Vec<CoefficientEntry>,
    pub total_check: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub solution: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    pub contribution: Vec<CoefficientEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionDocument {
    pub family: String,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    pub terms: Vec<TermDocument>,
    pub total: Vec<CoefficientEntry>,
    pub total_check: String,
}

fn entry(basis: &str, d: u32, c: &RatFunc) -> CoefficientEntry {
    CoefficientEntry {
        basis: basis.to_string(),
        degree_or_m: d,
        num: render_poly(c.numer()),
        den: render_poly(c.denom()),
    }
}

pub fn basis_entries(p: &BasisPolynomial) -> Vec<CoefficientEntry> {
    match p {
        BasisPolynomial::Z(z) => z.terms().map(|(d, c)| entry("z", d, c)).collect(),
        BasisPolynomial::Cos(c) => c.terms().map(|(m, x)| entry("cos", m, x)).collect(),
    }
}

fn check_word(pass: bool) -> String {
    if pass { "pass" } else { "fail" }.to_string()
}

pub fn polynomial_document(
    family: &str,
    n: u32,
    k: Option<u32>,
    p: &BasisPolynomial,
    pass: bool,
) -> PolynomialDocument {
    PolynomialDocument {
        family: family.to_string(),
        n,
        k,
        coefficients: basis_entries(p),
        total_check: check_word(pass),
    }
}

pub fn connection_document(c: &ConnectionExpansion, pass: bool) -> ConnectionDocument {
    let terms = c
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| TermDocument {
            solution: match &t.descriptor {
                Descriptor::Partition(p) => p.to_string(),
                Descriptor::Laguerre(s) => s.to_string(),
                Descriptor::Chebyshev(m) => crate::connection::render_monomial_text(m),
            },
            coefficient: match &t.coefficient {
                TermCoefficient::Abstract(s) => Some(s.to_string()),
                TermCoefficient::Field(_) => None,
            },
            contribution: basis_entries(&c.rescaled_value(i)),
        })
        .collect();
    let formula = matches!(c.family, crate::connection::Family::Gegenbauer)
        .then(|| render_gegenbauer_connection(c, false));
    ConnectionDocument {
        family: c.family.name().to_string(),
        n: c.n,
        k: c.k,
        formula,
        terms,
        total: basis_entries(&c.rescaled_total()),
        total_check: check_word(pass),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents contain only strings and integers")
}

pub fn parse_polynomial_document(s: &str) -> Result<PolynomialDocument> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_connection_document(s: &str) -> Result<ConnectionDocument> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn entry_value(e: &CoefficientEntry) -> Result<RatFunc> {
    RatFunc::new(parse_poly(&e.num)?, parse_poly(&e.den)?)
}

/// Rebuilds the exact polynomial from its coefficient entries.
pub fn entries_to_basis(entries: &[CoefficientEntry]) -> Result<BasisPolynomial> {
    let cos = entries.first().is_some_and(|e| e.basis == "cos");
    let mut z = ZPolynomial::zero();
    let mut c = CosPolynomial::zero();
    for e in entries {
        let v = entry_value(e)?;
        match (e.basis.as_str(), cos) {
            ("z", false) => z = z + ZPolynomial::monomial(e.degree_or_m, v),
            ("cos", true) => c = c + CosPolynomial::cos(e.degree_or_m, v),
            (b, _) => return Err(Error::Parse(format!("unexpected or mixed basis {b:?}"))),
        }
    }
    Ok(if cos {
        BasisPolynomial::Cos(c)
    } else {
        BasisPolynomial::Z(z)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::q_hermite;

    #[test]
    fn hermite_one_document() {
        let p = BasisPolynomial::Z(q_hermite(1, 12).unwrap());
        let doc = polynomial_document("q_hermite", 1, None, &p, true);
        assert_eq!(
            doc.coefficients,
            vec![CoefficientEntry {
                basis: "z".into(),
                degree_or_m: 1,
                num: "2".into(),
                den: "q^{1/2}".into()
            }]
        );
        let text = to_json(&doc);
        let back = parse_polynomial_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), text);
        assert_eq!(entries_to_basis(&back.coefficients).unwrap(), p);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(parse_polynomial_document("{\"family\": 3}").is_err());
        let bad = [CoefficientEntry {
            basis: "x".into(),
            degree_or_m: 0,
            num: "1".into(),
            den: "1".into(),
        }];
        assert!(entries_to_basis(&bad).is_err());
        let zero_den = [CoefficientEntry {
            basis: "z".into(),
            degree_or_m: 0,
            num: "1".into(),
            den: "0".into(),
        }];
        assert!(entries_to_basis(&zero_den).is_err());
    }
}
