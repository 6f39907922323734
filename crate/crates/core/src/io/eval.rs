//! Family dispatch shared by the command-line front end: exact evaluation
//! with a self-check, connection expansions, and the floating-point
//! cross-check at a sampled `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::connection::{
    gegenbauer_connection, hermite_connection, laguerre_connection, BasisPolynomial,
    ConnectionExpansion,
};
use crate::error::{Error, Result};
use crate::families::{
    gegenbauer_classical, hermite_classical, laguerre_classical, limit_q_to_1, q_gegenbauer_direct,
    q_gegenbauer_direct_in, q_gegenbauer_genfun, q_hermite, q_hermite_in, q_laguerre,
    q_laguerre_in, CosPoly, LaguerreIndex, Polynomial, QParams,
};
use crate::field::RatFunc;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalFamily {
    Hermite,
    Laguerre,
    Gegenbauer,
    ClassicalHermite,
    ClassicalLaguerre,
    /// The Chebyshev-type `C_n(cos θ) = Σ cos((n−2ℓ)θ)` used as the
    /// classical basis of the Gegenbauer connection.
    ClassicalGegenbauer,
}

impl EvalFamily {
    pub const ALL: [EvalFamily; 6] = [
        EvalFamily::Hermite,
        EvalFamily::Laguerre,
        EvalFamily::Gegenbauer,
        EvalFamily::ClassicalHermite,
        EvalFamily::ClassicalLaguerre,
        EvalFamily::ClassicalGegenbauer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalFamily::Hermite => "hermite",
            EvalFamily::Laguerre => "laguerre",
            EvalFamily::Gegenbauer => "gegenbauer",
            EvalFamily::ClassicalHermite => "classical-hermite",
            EvalFamily::ClassicalLaguerre => "classical-laguerre",
            EvalFamily::ClassicalGegenbauer => "classical-gegenbauer",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, EvalFamily::Laguerre | EvalFamily::ClassicalLaguerre)
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            EvalFamily::ClassicalHermite
                | EvalFamily::ClassicalLaguerre
                | EvalFamily::ClassicalGegenbauer
        )
    }
}

impl fmt::Display for EvalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EvalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EvalFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// An exact polynomial together with the outcome of its independent check.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub family: EvalFamily,
    pub n: u32,
    pub k: Option<u32>,
    pub value: BasisPolynomial,
    pub check: bool,
}

fn require_k(family: EvalFamily, k: Option<u32>) -> Result<Option<u32>> {
    match (family.needs_k(), k) {
        (true, None) => Err(Error::IndexOutOfRange(format!("{family} needs --k"))),
        (false, Some(_)) => Err(Error::IndexOutOfRange(format!("{family} takes no --k"))),
        _ => Ok(k),
    }
}

fn rational_z(p: Polynomial<BigRational>) -> BasisPolynomial {
    BasisPolynomial::Z(p.map(RatFunc::from_rational))
}

/// Exact polynomial of the family. The check compares two independent
/// constructions: generating function against the connection formula for
/// the q-families (or direct sum for Gegenbauer), and the classical
/// families against the `q → 1` limit of their deformations.
pub fn evaluate(family: EvalFamily, n: u32, k: Option<u32>, order: usize) -> Result<Evaluation> {
    let k = require_k(family, k)?;
    let kk = k.unwrap_or(0);
    let (value, check) = match family {
        EvalFamily::Hermite => {
            let v = BasisPolynomial::Z(q_hermite(n, order)?);
            let ok = hermite_connection(n)?.rescaled_total() == v;
            (v, ok)
        }
        EvalFamily::Laguerre => {
            let v = BasisPolynomial::Z(q_laguerre(n, kk, order)?);
            let ok = laguerre_connection(n, kk, &BTreeMap::new())?.rescaled_total() == v;
            (v, ok)
        }
        EvalFamily::Gegenbauer => {
            let v = q_gegenbauer_genfun(n, order)?;
            let ok = q_gegenbauer_direct(n)? == v;
            (BasisPolynomial::Cos(v), ok)
        }
        EvalFamily::ClassicalHermite => {
            let v = hermite_classical::<BigRational>(n);
            let ok = limit_q_to_1(&q_hermite(n, order)?)? == v;
            (rational_z(v), ok)
        }
        EvalFamily::ClassicalLaguerre => {
            let idx = LaguerreIndex {
                k: kk,
                alpha: n as i64 - kk as i64,
            };
            let v = laguerre_classical::<BigRational>(idx, &Polynomial::var());
            let ok = limit_q_to_1(&q_laguerre(n, kk, order)?)? == v;
            (rational_z(v), ok)
        }
        EvalFamily::ClassicalGegenbauer => {
            let v = gegenbauer_classical::<RatFunc>(n);
            let at_unit = q_gegenbauer_direct(n)?.try_map(|c| c.subs_lambda(&RatFunc::q()))?;
            let ok = at_unit == v;
            (BasisPolynomial::Cos(v), ok)
        }
    };
    Ok(Evaluation {
        family,
        n,
        k,
        value,
        check,
    })
}

/// Connection expansion and whether its rescaled total equals the directly
/// computed polynomial. `aux` lists `n_1, n_2, …` for the Laguerre family.
pub fn connect(
    family: EvalFamily,
    n: u32,
    k: Option<u32>,
    aux: &[i64],
) -> Result<(ConnectionExpansion, bool)> {
    let k = require_k(family, k)?;
    let kk = k.unwrap_or(0);
    let c = match family {
        EvalFamily::Hermite => hermite_connection(n)?,
        EvalFamily::Laguerre => {
            if !aux.is_empty() && aux.len() != kk as usize {
                return Err(Error::IndexOutOfRange(format!(
                    "--aux needs {kk} integers, got {}",
                    aux.len()
                )));
            }
            let map = aux
                .iter()
                .enumerate()
                .map(|(j, v)| (j as u32 + 1, *v))
                .collect();
            laguerre_connection(n, kk, &map)?
        }
        EvalFamily::Gegenbauer => gegenbauer_connection(n)?,
        other => {
            return Err(Error::IndexOutOfRange(format!(
                "{other} has no connection formula"
            )))
        }
    };
    let direct = match family {
        EvalFamily::Hermite => BasisPolynomial::Z(q_hermite(n, n as usize)?),
        EvalFamily::Laguerre => BasisPolynomial::Z(q_laguerre(n, kk, kk as usize)?),
        _ => BasisPolynomial::Cos(q_gegenbauer_direct(n)?),
    };
    let ok = c.rescaled_total() == direct;
    Ok((c, ok))
}

fn relative_gap(exact: f64, float: f64) -> f64 {
    (exact - float).abs() / exact.abs().max(1.0)
}

fn z_gap(
    exact: &Polynomial<RatFunc>,
    float: &Polynomial<f64>,
    q: f64,
    big_lambda: f64,
) -> Result<f64> {
    let top = exact.degree().max(float.degree()).unwrap_or(0);
    let mut worst = 0.0f64;
    for d in 0..=top {
        worst = worst.max(relative_gap(
            exact.coeff(d).eval_at_q(q, big_lambda)?,
            float.coeff(d),
        ));
    }
    Ok(worst)
}

fn cos_gap(exact: &CosPoly<RatFunc>, float: &CosPoly<f64>, q: f64, big_lambda: f64) -> Result<f64> {
    let top = exact
        .terms()
        .map(|(m, _)| m)
        .chain(float.terms().map(|(m, _)| m))
        .max();
    let mut worst = 0.0f64;
    for m in 0..=top.unwrap_or(0) {
        worst = worst.max(relative_gap(
            exact.coeff(m).eval_at_q(q, big_lambda)?,
            float.coeff(m),
        ));
    }
    Ok(worst)
}

/// Largest relative coefficient gap between the exact polynomial evaluated
/// at `q` (with `q^λ` for the Gegenbauer family) and the same construction
/// run directly in `f64`. `None` for the classical families.
pub fn sample_deviation(e: &Evaluation, q: f64, lambda: f64) -> Result<Option<f64>> {
    if q.is_nan() || q <= 0.0 || q == 1.0 {
        return Err(Error::InvalidBase);
    }
    let params = QParams::sample(q, lambda);
    let big_lambda = params.lambda;
    let gap = match (e.family, &e.value) {
        (EvalFamily::Hermite, BasisPolynomial::Z(p)) => {
            z_gap(p, &q_hermite_in(&params, e.n)?, q, big_lambda)?
        }
        (EvalFamily::Laguerre, BasisPolynomial::Z(p)) => z_gap(
            p,
            &q_laguerre_in(&params, e.n, e.k.unwrap_or(0))?,
            q,
            big_lambda,
        )?,
        (EvalFamily::Gegenbauer, BasisPolynomial::Cos(p)) => {
            cos_gap(p, &q_gegenbauer_direct_in(&params, e.n)?, q, big_lambda)?
        }
        _ => return Ok(None),
    };
    Ok(Some(gap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_self_checks() {
        for f in EvalFamily::ALL {
            let k = f.needs_k().then_some(2);
            for n in 0..=4 {
                let e = evaluate(f, n, k, 12).unwrap();
                assert!(e.check, "{f} n={n}");
            }
        }
    }

    #[test]
    fn usage_errors() {
        assert!(evaluate(EvalFamily::Laguerre, 3, None, 12).is_err());
        assert!(evaluate(EvalFamily::Hermite, 3, Some(1), 12).is_err());
        assert!(evaluate(EvalFamily::Hermite, 13, None, 12).is_err());
        assert!(connect(EvalFamily::ClassicalHermite, 2, None, &[]).is_err());
        assert!(connect(EvalFamily::Laguerre, 3, Some(3), &[0, 0]).is_err());
        assert!("q-hermite".parse::<EvalFamily>().is_err());
    }

    #[test]
    fn float_path_agrees() {
        for f in [
            EvalFamily::Hermite,
            EvalFamily::Laguerre,
            EvalFamily::Gegenbauer,
        ] {
            let e = evaluate(f, 5, f.needs_k().then_some(3), 12).unwrap();
            let gap = sample_deviation(&e, 0.7, 1.5).unwrap().unwrap();
            assert!(gap < 1e-9, "{f}: {gap}");
        }
        let classical = evaluate(EvalFamily::ClassicalHermite, 2, None, 12).unwrap();
        assert_eq!(sample_deviation(&classical, 0.7, 1.5).unwrap(), None);
        assert!(sample_deviation(&classical, 1.0, 1.5).is_err());
    }

    #[test]
    fn connect_matches_direct() {
        let (c, ok) = connect(EvalFamily::Laguerre, 3, Some(3), &[1, -2, 3]).unwrap();
        assert!(ok);
        assert_eq!(c.terms.len(), 18);
        assert!(connect(EvalFamily::Gegenbauer, 4, None, &[]).unwrap().1);
    }
}
