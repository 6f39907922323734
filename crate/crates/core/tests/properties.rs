use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use qpoly::connection::{laguerre_partitions, partitions_of, BasisPolynomial};
use qpoly::field::{IntPoly, Monomial, RatFunc};
use qpoly::io::json::{basis_entries, entries_to_basis};
use qpoly::qkernel::{q_number, QBase};
use qpoly::{Coefficient, TruncatedSeries, ZPolynomial};

fn intpoly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((0u32..4, 0u32..3, -5i64..=5), 1..4).prop_map(|terms| {
        IntPoly::from_terms(
            terms
                .into_iter()
                .map(|(s, l, c)| (Monomial::new(s, l), BigInt::from(c))),
        )
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        intpoly(),
        intpoly().prop_filter("nonzero denominator", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Elements of ℚ(s), where the `q → 1` limit is defined.
fn lambda_free() -> impl Strategy<Value = RatFunc> {
    let poly = || {
        prop::collection::vec((0u32..4, -5i64..=5), 1..4).prop_map(|terms| {
            IntPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(s, c)| (Monomial::new(s, 0), BigInt::from(c))),
            )
        })
    };
    (
        poly(),
        poly().prop_filter("nonzero denominator", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Series with zero constant term.
fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<BigRational>> {
    prop::collection::vec(rational(), order).prop_map(move |c| {
        TruncatedSeries::from_coeffs(order, std::iter::once(BigRational::zero()).chain(c))
    })
}

fn zpoly() -> impl Strategy<Value = ZPolynomial> {
    prop::collection::vec((0u32..8, ratfunc()), 0..5).prop_map(ZPolynomial::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in ratfunc()) {
        let again = RatFunc::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        let parsed: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn integer_powers_add(a in ratfunc(), i in -3i64..=3, j in -3i64..=3) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.powi(i).unwrap() * a.powi(j).unwrap(), a.powi(i + j).unwrap());
    }

    #[test]
    fn numeric_evaluation_approaches_the_limit(a in lambda_free()) {
        // Sampled symmetrically around s = 1.
        if let Ok(limit) = a.limit_q_to_1() {
            let l = limit.to_f64().unwrap();
            let at = |s: f64| a.eval_numeric(Complex64::new(s, 0.0), Complex64::new(1.0, 0.0)).unwrap().re;
            let v = (at(1.0 + 1e-4) + at(1.0 - 1e-4)) / 2.0;
            prop_assert!((v - l).abs() <= 1e-3 * l.abs().max(1.0), "{} vs {}", v, l);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_and_log_are_inverse(f in series(16)) {
        let one_plus = TruncatedSeries::one(16).checked_add(&f).unwrap();
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn exp_turns_sums_into_products(a in series(10), b in series(10)) {
        let lhs = a.checked_add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().checked_mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_product_is_associative_and_commutative(a in series(8), b in series(8), c in series(8)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn polynomial_entries_round_trip(p in zpoly()) {
        let basis = BasisPolynomial::Z(p);
        let back = entries_to_basis(&basis_entries(&basis)).unwrap();
        prop_assert_eq!(back, basis);
    }

    #[test]
    fn q_number_tends_to_n(n in 0u32..=20) {
        let value = q_number(n, &QBase::q());
        prop_assert_eq!(value.limit_q_to_1().unwrap(), BigRational::from_integer(n.into()));
    }
}

/// Coefficients of `∏_{k≥1} (1 − x^k)^{−colours}` up to `x^max`.
fn generating_counts(max: usize, colours: u32) -> Vec<usize> {
    let mut c = vec![0usize; max + 1];
    c[0] = 1;
    for k in 1..=max {
        for _ in 0..colours {
            for i in k..=max {
                c[i] += c[i - k];
            }
        }
    }
    c
}

#[test]
fn partition_counts_match_generating_function() {
    let single = generating_counts(12, 1);
    for n in 0..=12 {
        assert_eq!(partitions_of(n).len(), single[n as usize], "p({n})");
    }
    let double = generating_counts(8, 2);
    for n in 0..=8u32 {
        for k in 0..=8u32 {
            let expected: usize = (0..=n.min(k)).map(|l| double[(k - l) as usize]).sum();
            let sols = laguerre_partitions(n, k);
            assert_eq!(sols.len(), expected, "n={n}, k={k}");
            assert!(sols.iter().all(|s| s.total() == k));
        }
    }
}

#[test]
fn rationals_embed_exactly() {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    assert_eq!(
        RatFunc::from_rational(&half) * RatFunc::from_int(2),
        RatFunc::one()
    );
}
