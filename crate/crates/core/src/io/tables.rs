//! Reference tables of the explicit Gegenbauer connection coefficients
//! (`n ≤ 5`) and of the classical sum-rule combinations `ℐ_ℓ` (`ℓ ≤ 5`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::connection::{SymMonomial, SymPoly, Symbol};

/// `scale · Σ c·∏β · ∏C`, with repeated indices standing for powers.
struct Row {
    cheb: &'static [u32],
    scale: (i64, i64),
    inner: &'static [(i64, &'static [u32])],
}

const fn row(
    cheb: &'static [u32],
    scale: (i64, i64),
    inner: &'static [(i64, &'static [u32])],
) -> Row {
    Row { cheb, scale, inner }
}

static GEGENBAUER: [&[Row]; 6] = [
    &[row(&[], (1, 1), &[(1, &[])])],
    &[row(&[1], (1, 1), &[(1, &[1])])],
    &[
        row(&[2], (1, 1), &[(1, &[2])]),
        row(&[1, 1], (-1, 2), &[(1, &[2]), (-1, &[1, 1])]),
    ],
    &[
        row(&[3], (1, 1), &[(1, &[3])]),
        row(&[1, 2], (-1, 1), &[(1, &[3]), (-1, &[1, 2])]),
        row(
            &[1, 1, 1],
            (1, 6),
            &[(2, &[3]), (-3, &[1, 2]), (1, &[1, 1, 1])],
        ),
    ],
    &[
        row(&[4], (1, 1), &[(1, &[4])]),
        row(&[2, 2], (-1, 2), &[(1, &[4]), (-1, &[2, 2])]),
        row(&[1, 3], (-1, 1), &[(1, &[4]), (-1, &[1, 3])]),
        row(
            &[1, 1, 2],
            (1, 2),
            &[(2, &[4]), (-2, &[1, 3]), (-1, &[2, 2]), (1, &[1, 1, 2])],
        ),
        row(
            &[1, 1, 1, 1],
            (-1, 24),
            &[
                (6, &[4]),
                (-8, &[1, 3]),
                (-3, &[2, 2]),
                (6, &[1, 1, 2]),
                (-1, &[1, 1, 1, 1]),
            ],
        ),
    ],
    &[
        row(&[5], (1, 1), &[(1, &[5])]),
        row(&[1, 4], (-1, 1), &[(1, &[5]), (-1, &[1, 4])]),
        row(&[2, 3], (-1, 1), &[(1, &[5]), (-1, &[2, 3])]),
        row(
            &[1, 1, 3],
            (1, 2),
            &[(2, &[5]), (-2, &[1, 4]), (-1, &[2, 3]), (1, &[1, 1, 3])],
        ),
        row(
            &[1, 2, 2],
            (1, 2),
            &[(2, &[5]), (-1, &[1, 4]), (-2, &[2, 3]), (1, &[1, 2, 2])],
        ),
        row(
            &[1, 1, 1, 2],
            (-1, 6),
            &[
                (6, &[5]),
                (-6, &[1, 4]),
                (-5, &[2, 3]),
                (3, &[1, 1, 3]),
                (3, &[1, 2, 2]),
                (-1, &[1, 1, 1, 2]),
            ],
        ),
        row(
            &[1, 1, 1, 1, 1],
            (1, 120),
            &[
                (24, &[5]),
                (-30, &[1, 4]),
                (-20, &[2, 3]),
                (20, &[1, 1, 3]),
                (15, &[1, 2, 2]),
                (-10, &[1, 1, 1, 2]),
                (1, &[1, 1, 1, 1, 1]),
            ],
        ),
    ],
];

/// `ℐ_ℓ` as `(num, den, C-indices)` terms.
static SUM_RULES: [&[(i64, i64, &[u32])]; 5] = [
    &[(1, 1, &[1])],
    &[(1, 1, &[2]), (-1, 2, &[1, 1])],
    &[(1, 1, &[3]), (-1, 1, &[1, 2]), (1, 3, &[1, 1, 1])],
    &[
        (1, 1, &[4]),
        (-1, 1, &[1, 3]),
        (-1, 2, &[2, 2]),
        (1, 1, &[1, 1, 2]),
        (-1, 4, &[1, 1, 1, 1]),
    ],
    &[
        (1, 1, &[5]),
        (-1, 1, &[1, 4]),
        (-1, 1, &[2, 3]),
        (1, 1, &[1, 1, 3]),
        (1, 1, &[1, 2, 2]),
        (-1, 1, &[1, 1, 1, 2]),
        (1, 5, &[1, 1, 1, 1, 1]),
    ],
];

fn mono(symbol: fn(u32) -> Symbol, idx: &[u32]) -> SymMonomial {
    let mut m = SymMonomial::new();
    for &i in idx {
        *m.entry(symbol(i)).or_insert(0) += 1;
    }
    m
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reference coefficient polynomial (in `β_k` and `C_m`) for `n ≤ 5`.
pub fn gegenbauer_reference(n: u32) -> Option<SymPoly> {
    let rows = GEGENBAUER.get(n as usize)?;
    let mut out = SymPoly::zero();
    for r in rows.iter() {
        let c = mono(Symbol::Cheb, r.cheb);
        for (coef, betas) in r.inner {
            let mut m = mono(Symbol::Beta, betas);
            m.extend(c.iter().map(|(s, e)| (*s, *e)));
            out = out + SymPoly::monomial(m, frac(r.scale.0 * coef, r.scale.1));
        }
    }
    Some(out)
}

/// Reference `ℐ_ℓ` for `1 ≤ ℓ ≤ 5`.
pub fn sum_rule_reference(l: u32) -> Option<SymPoly> {
    let terms = SUM_RULES.get((l as usize).checked_sub(1)?)?;
    Some(SymPoly::from_terms(
        terms
            .iter()
            .map(|(n, d, idx)| (mono(Symbol::Cheb, idx), frac(*n, *d))),
    ))
}

/// `ℐ₃` with the cubic term written as `−⅓ C₁³`, kept to show that this
/// sign is inconsistent with the logarithm and with the `n = 3` row.
pub fn sum_rule_three_misprint() -> SymPoly {
    SymPoly::from_terms([
        (mono(Symbol::Cheb, &[3]), frac(1, 1)),
        (mono(Symbol::Cheb, &[1, 2]), frac(-1, 1)),
        (mono(Symbol::Cheb, &[1, 1, 1]), frac(-1, 3)),
    ])
}
