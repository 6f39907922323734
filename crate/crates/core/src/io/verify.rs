//! Self-verification suites and their machine-readable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::connection::{
    classical_lambda_connection, gegenbauer_connection, gegenbauer_sum_rule, hermite_connection,
    laguerre_connection, partitions_of, sum_rule_combination, BasisPolynomial, Descriptor, SymPoly,
    Symbol, TermCoefficient,
};
use crate::error::{Error, Result};
use crate::families::{
    gegenbauer_classical, hermite_classical, laguerre_classical, limit_q_to_1, q_gegenbauer_direct,
    q_gegenbauer_genfun, q_hermite, q_laguerre, CosPoly, LaguerreIndex, Polynomial,
};
use crate::field::RatFunc;
use crate::qkernel::{
    exp_q_quesne, exp_q_sum, q_exp_product_form, q_exp_sum, q_number, quesne_c, QBase, QExpKind,
};
use crate::series::TruncatedSeries;

use super::tables::{gegenbauer_reference, sum_rule_reference};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Qexp,
    Hermite,
    Laguerre,
    Gegenbauer,
    SumRules,
    Limits,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Qexp,
        Suite::Hermite,
        Suite::Laguerre,
        Suite::Gegenbauer,
        Suite::SumRules,
        Suite::Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Qexp => "qexp",
            Suite::Hermite => "hermite",
            Suite::Laguerre => "laguerre",
            Suite::Gegenbauer => "gegenbauer",
            Suite::SumRules => "sumrules",
            Suite::Limits => "limits",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::ALL)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// The identity or table being checked.
    pub anchor: String,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: u32,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{} {:<40} {:<38} {:>9.2} ms",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.anchor,
                c.elapsed_ms
            )?;
            if !c.detail.is_empty() {
                write!(f, "  {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            self.failures()
        )
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    /// Runs one check; an `Err` counts as a failure with the error as detail.
    fn check(&mut self, id: String, anchor: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(CheckResult {
            id,
            anchor: anchor.to_string(),
            pass,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            detail,
        });
    }

    fn equal<T: PartialEq>(
        &mut self,
        id: String,
        anchor: &str,
        f: impl FnOnce() -> Result<(T, T)>,
    ) {
        self.check(id, anchor, || {
            let (a, b) = f()?;
            Ok((
                a == b,
                if a == b {
                    String::new()
                } else {
                    "sides differ".into()
                },
            ))
        });
    }
}

/// Runs one suite (or all of them, in order) up to degree `max_n`.
pub fn run_suite(suite: Suite, max_n: u32) -> VerificationReport {
    let mut r = Runner { checks: Vec::new() };
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::ALL.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        match s {
            Suite::Qexp => qexp_checks(&mut r, max_n),
            Suite::Hermite => hermite_checks(&mut r, max_n),
            Suite::Laguerre => laguerre_checks(&mut r, max_n),
            Suite::Gegenbauer => gegenbauer_checks(&mut r, max_n),
            Suite::SumRules => sum_rule_checks(&mut r, max_n),
            Suite::Limits => limit_checks(&mut r, max_n),
            Suite::All => unreachable!(),
        }
    }
    VerificationReport {
        suite: suite.name().to_string(),
        max_n,
        checks: r.checks,
    }
}

fn qexp_checks(r: &mut Runner, max_n: u32) {
    let order = max_n.max(1) as usize;
    let z = TruncatedSeries::<RatFunc>::variable(order);
    for e in [1i64, -2, -4] {
        let base = QBase::q_pow(e);
        for kind in [QExpKind::Little, QExpKind::Big] {
            let tag = if kind == QExpKind::Little { "e" } else { "E" };
            r.equal(
                format!("qexp/{tag}-product-form/q^{e}"),
                "q-exponential product form",
                || {
                    Ok((
                        q_exp_sum(kind, &z, &base)?,
                        q_exp_product_form(kind, &z, &base)?,
                    ))
                },
            );
        }
        r.equal(
            format!("qexp/e-times-E/q^{e}"),
            "e_q(z) E_q(-z) = 1",
            || {
                let minus = z.scalar_mul(&-RatFunc::one());
                let prod = q_exp_sum(QExpKind::Little, &z, &base)?.checked_mul(&q_exp_sum(
                    QExpKind::Big,
                    &minus,
                    &base,
                )?)?;
                Ok((prod, TruncatedSeries::one(order)))
            },
        );
    }
    let q = QBase::q();
    r.equal(
        "qexp/exp_q-from-e_q".into(),
        "exp_q(z) = e_q((1-q)z)",
        || {
            let shrunk = z.scalar_mul(&(RatFunc::one() - RatFunc::q()));
            Ok((
                exp_q_sum(&z, &q)?,
                q_exp_sum(QExpKind::Little, &shrunk, &q)?,
            ))
        },
    );
    r.equal("qexp/quesne".into(), "Quesne exponential form", || {
        Ok((exp_q_sum(&z, &q)?, exp_q_quesne(&z, &q)?))
    });
    r.check(
        "qexp/float-product-form".into(),
        "q-exponential product form",
        || {
            let zf = TruncatedSeries::<f64>::variable(order);
            let base = QBase::new(0.7)?;
            let a = q_exp_sum(QExpKind::Little, &zf, &base)?;
            let b = q_exp_product_form(QExpKind::Little, &zf, &base)?;
            let dev = a
                .coeffs()
                .iter()
                .zip(b.coeffs())
                .map(|(x, y)| (x - y).abs() / x.abs().max(1.0))
                .fold(0.0, f64::max);
            Ok((dev < 1e-10, format!("max relative deviation {dev:.2e}")))
        },
    );
}

fn hermite_checks(r: &mut Runner, max_n: u32) {
    for n in 0..=max_n {
        r.check(
            format!("hermite/connection/n={n}"),
            "Hermite connection formula",
            || {
                let c = hermite_connection(n)?;
                let direct = BasisPolynomial::Z(q_hermite(n, n as usize)?);
                let counted = c.terms.len() == partitions_of(n).len();
                let ok = counted && c.rescaled_total() == direct;
                Ok((ok, format!("{} terms", c.terms.len())))
            },
        );
        r.check(
            format!("hermite/parity/n={n}"),
            "H_n(-z;q) = (-1)^n H_n(z;q)",
            || Ok((q_hermite(n, n as usize)?.has_parity(n), String::new())),
        );
    }
}

/// Auxiliary integers `n_j` for `j ≤ k`: all zero, `n_j = j`, and a seeded
/// random choice in `[-3, 3]`.
fn aux_choices(k: u32, seed: u64) -> Vec<(String, BTreeMap<u32, i64>)> {
    let mut rng = StdRng::seed_from_u64(seed);
    vec![
        ("zero".into(), (1..=k).map(|j| (j, 0)).collect()),
        ("index".into(), (1..=k).map(|j| (j, j as i64)).collect()),
        (
            "random".into(),
            (1..=k).map(|j| (j, rng.gen_range(-3..=3))).collect(),
        ),
    ]
}

fn laguerre_checks(r: &mut Runner, max_n: u32) {
    for n in 0..=max_n {
        for k in 0..=max_n {
            for (label, aux) in aux_choices(k, 1000 * n as u64 + k as u64) {
                r.equal(
                    format!("laguerre/connection/n={n},k={k},aux={label}"),
                    "Laguerre connection formula",
                    || {
                        let c = laguerre_connection(n, k, &aux)?;
                        Ok((
                            c.rescaled_total(),
                            BasisPolynomial::Z(q_laguerre(n, k, k as usize)?),
                        ))
                    },
                );
            }
        }
    }
}

/// `Σ coefficient · ∏ C_m` over all terms, as one polynomial in `β_k, C_m`.
fn assembled_gegenbauer(n: u32) -> Result<SymPoly> {
    let c = gegenbauer_connection(n)?;
    let mut out = SymPoly::zero();
    for t in &c.terms {
        if let (TermCoefficient::Abstract(coef), Descriptor::Chebyshev(m)) =
            (&t.coefficient, &t.descriptor)
        {
            out = out + coef.clone() * SymPoly::monomial(m.clone(), BigRational::one());
        }
    }
    Ok(out)
}

fn gegenbauer_checks(r: &mut Runner, max_n: u32) {
    for n in 0..=max_n {
        r.equal(
            format!("gegenbauer/connection/n={n}"),
            "Gegenbauer connection formula",
            || {
                Ok((
                    gegenbauer_connection(n)?.rescaled_total(),
                    BasisPolynomial::Cos(q_gegenbauer_direct(n)?),
                ))
            },
        );
        r.equal(
            format!("gegenbauer/generating-function/n={n}"),
            "Gegenbauer generating function",
            || Ok((q_gegenbauer_direct(n)?, q_gegenbauer_genfun(n, n as usize)?)),
        );
        if let Some(reference) = gegenbauer_reference(n) {
            r.equal(
                format!("gegenbauer/reference-table/n={n}"),
                "explicit coefficients n <= 5",
                || Ok((assembled_gegenbauer(n)?, reference)),
            );
        }
    }
}

fn sum_rule_checks(r: &mut Runner, max_n: u32) {
    for l in 1..=max_n {
        r.equal(
            format!("sumrules/log-identity/l={l}"),
            "Gegenbauer sum rules",
            || gegenbauer_sum_rule(l),
        );
        if let Some(reference) = sum_rule_reference(l) {
            r.equal(
                format!("sumrules/reference/l={l}"),
                "explicit sum-rule combinations",
                || Ok((sum_rule_combination(l), reference)),
            );
            r.equal(
                format!("sumrules/deformed-combination/l={l}"),
                "Gegenbauer sum rules",
                || {
                    let deformed = (0..=l)
                        .map(q_gegenbauer_direct)
                        .collect::<Result<Vec<_>>>()?;
                    let lhs = crate::connection::eval_cheb(
                        &sum_rule_reference(l).unwrap_or_else(SymPoly::zero),
                        |m| deformed[m as usize].clone(),
                    );
                    Ok((lhs, gegenbauer_sum_rule(l)?.0))
                },
            );
        }
    }
}

fn cheb_poch(l: u32) -> SymPoly {
    (0..l).fold(SymPoly::one(), |acc, i| {
        acc * (SymPoly::lambda() + SymPoly::constant(BigRational::from_integer(BigInt::from(i))))
    })
}

/// Classical `C_n^{(λ)}(cos θ) = Σ_j (λ)_j (λ)_{n−j} / (j!(n−j)!) cos((n−2j)θ)`.
fn classical_gegenbauer_lambda(n: u32) -> CosPoly<SymPoly> {
    let fact = |m: u32| (1..=m).fold(BigInt::one(), |a, i| a * i);
    let mut out = CosPoly::zero();
    for j in 0..=n {
        let c = cheb_poch(j)
            * cheb_poch(n - j)
            * SymPoly::constant(BigRational::new(BigInt::one(), fact(j) * fact(n - j)));
        let m = (n as i64 - 2 * j as i64).unsigned_abs() as u32;
        // cos(−mθ) = cos(mθ), and the m = 0 term is the constant itself.
        out = out + CosPoly::cos(m, c);
    }
    out
}

fn limit_checks(r: &mut Runner, max_n: u32) {
    for n in 0..=max_n.max(1) {
        r.check(format!("limits/q-number/n={n}"), "[n]_q -> n", || {
            let v = q_number(n, &QBase::q()).limit_q_to_1()?;
            Ok((v == BigRational::from_integer(n.into()), v.to_string()))
        });
        if n >= 1 {
            r.check(format!("limits/quesne/k={n}"), "c_k(q) -> delta_k1", || {
                let v = quesne_c(n, &QBase::q())?.limit_q_to_1()?;
                Ok((
                    v == if n == 1 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    },
                    v.to_string(),
                ))
            });
        }
    }
    for n in 0..=max_n {
        r.equal(
            format!("limits/hermite/n={n}"),
            "H_n(z;q) -> H_n(z)",
            || {
                Ok((
                    limit_q_to_1(&q_hermite(n, n as usize)?)?,
                    hermite_classical::<BigRational>(n),
                ))
            },
        );
        for k in 0..=max_n {
            r.equal(
                format!("limits/laguerre/n={n},k={k}"),
                "L_k^(a)(z;q) -> L_k^(a)(z)",
                || {
                    let idx = LaguerreIndex {
                        k,
                        alpha: n as i64 - k as i64,
                    };
                    Ok((
                        limit_q_to_1(&q_laguerre(n, k, k as usize)?)?,
                        laguerre_classical(idx, &Polynomial::var()),
                    ))
                },
            );
        }
        r.equal(
            format!("limits/gegenbauer-unit-lambda/n={n}"),
            "C_n^(1)(z;q) = U_n(z)",
            || {
                let at_q = q_gegenbauer_direct(n)?.try_map(|c| c.subs_lambda(&RatFunc::q()))?;
                Ok((at_q, gegenbauer_classical::<RatFunc>(n)))
            },
        );
        r.equal(
            format!("limits/gegenbauer-classical-lambda/n={n}"),
            "beta_k -> lambda collapse",
            || {
                let collapsed = classical_lambda_connection(n).eval(|s| match s {
                    Symbol::Cheb(m) => gegenbauer_classical::<SymPoly>(m),
                    Symbol::Lambda => CosPoly::constant(SymPoly::lambda()),
                    Symbol::Beta(_) => CosPoly::zero(),
                });
                Ok((collapsed, classical_gegenbauer_lambda(n)))
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_degree() {
        for s in Suite::ALL {
            let rep = run_suite(s, 3);
            assert!(rep.passed(), "{rep}");
            assert!(!rep.checks.is_empty());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::ALL) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_serializes() {
        let rep = run_suite(Suite::Hermite, 1);
        let json = serde_json::to_string(&rep).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }
}
