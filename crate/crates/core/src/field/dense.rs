//! Dense integer polynomial kernels used behind [`IntPoly`](super::IntPoly).
//!
//! `UPoly` is a little-endian coefficient vector over Z with no trailing
//! zeros (the zero polynomial is the empty vector). `BPoly` is a dense
//! polynomial in `s` whose coefficients are `UPoly`s in `Λ`.
//!
//! The gcd routines use the heuristic gcd (evaluation at a large integer,
//! gcd of the images, ξ-adic reconstruction, trial division) and fall back
//! to a primitive pseudo-remainder sequence when the heuristic gives up.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BPoly = Vec<UPoly>;

const HEU_TRIES: usize = 6;
const HEU_MAX_BITS: u64 = 400_000;

pub(crate) fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn u_add(a: &UPoly, b: &UPoly) -> UPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.clone();
    for (o, c) in out.iter_mut().zip(short) {
        *o += c;
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

fn u_maxnorm(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

pub(crate) fn u_eval(a: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact division over Z; `None` if `b` does not divide `a`.
pub(crate) fn u_divexact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let lead = &rem[shift + b.len() - 1];
        if lead.is_zero() {
            continue;
        }
        let (q, r) = lead.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[shift + j] -= &q * bj;
            }
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    u_trim(&mut quot);
    Some(quot)
}

/// Primitive part with positive leading coefficient.
pub(crate) fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_scalar(a, &c)
}

/// Symmetric ξ-adic digits of an integer, lowest first.
fn symmetric_digits(mut v: BigInt, xi: &BigInt) -> UPoly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        out.push(d);
    }
    out
}

fn heu_start(norm_a: &BigInt, norm_b: &BigInt) -> BigInt {
    BigInt::from(2) * norm_a.min(norm_b) + 29
}

fn heu_next(xi: &BigInt) -> BigInt {
    xi * 73794 / 27011
}

fn too_large(xi: &BigInt, degree: usize) -> bool {
    xi.bits().saturating_mul(degree as u64 + 1) > HEU_MAX_BITS
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        let mut next = u_scale(&r, &lb);
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] -= &lr * bj;
        }
        u_trim(&mut next);
        r = next;
    }
    r
}

fn u_gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = u_primitive(a);
    let mut y = u_primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    x
}

fn u_gcd_heu(a: &UPoly, b: &UPoly, tries: usize) -> Option<UPoly> {
    let mut xi = heu_start(&u_maxnorm(a), &u_maxnorm(b));
    for _ in 0..tries {
        if too_large(&xi, a.len().max(b.len())) {
            return None;
        }
        let gamma = u_eval(a, &xi).gcd(&u_eval(b, &xi));
        if !gamma.is_zero() {
            let g = u_primitive(&symmetric_digits(gamma, &xi));
            if !g.is_empty() && u_divexact(a, &g).is_some() && u_divexact(b, &g).is_some() {
                return Some(g);
            }
        }
        xi = heu_next(&xi);
    }
    None
}

/// gcd over Z[x] with positive leading coefficient (zero iff both inputs are zero).
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    u_gcd_with(a, b, HEU_TRIES)
}

pub(crate) fn u_gcd_with(a: &UPoly, b: &UPoly, tries: usize) -> UPoly {
    if a.is_empty() {
        return u_primitive_sign(b);
    }
    if b.is_empty() {
        return u_primitive_sign(a);
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let pa = u_div_scalar(a, &ca);
    let pb = u_div_scalar(b, &cb);
    let g = u_gcd_heu(&pa, &pb, tries).unwrap_or_else(|| u_gcd_prs(&pa, &pb));
    u_scale(&g, &c)
}

fn u_primitive_sign(a: &UPoly) -> UPoly {
    match a.last() {
        Some(l) if l.sign() == Sign::Minus => a.iter().map(|c| -c).collect(),
        _ => a.clone(),
    }
}

// ---------------------------------------------------------------------------
// Bivariate: polynomial in s with UPoly (in Λ) coefficients.

pub(crate) fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

pub(crate) fn b_mul(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let la = a.iter().map(Vec::len).max().unwrap_or(0);
    let lb = b.iter().map(Vec::len).max().unwrap_or(0);
    if la <= 1 && lb <= 1 {
        // Λ-free: a plain univariate product, one big-int product per pair.
        let ua: UPoly = a
            .iter()
            .map(|c| c.first().cloned().unwrap_or_default())
            .collect();
        let ub: UPoly = b
            .iter()
            .map(|c| c.first().cloned().unwrap_or_default())
            .collect();
        return u_mul(&ua, &ub)
            .into_iter()
            .map(|c| if c.is_zero() { Vec::new() } else { vec![c] })
            .collect();
    }
    let mut out: BPoly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_empty() {
                out[i + j] = u_add(&out[i + j], &u_mul(x, y));
            }
        }
    }
    b_trim(&mut out);
    out
}

pub(crate) fn b_divexact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut rem = a.clone();
    let mut quot: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let lead = &rem[shift + b.len() - 1];
        if lead.is_empty() {
            continue;
        }
        let q = u_divexact(lead, lb)?;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_empty() {
                rem[shift + j] = u_sub(&rem[shift + j], &u_mul(&q, bj));
            }
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_empty()) {
        return None;
    }
    b_trim(&mut quot);
    Some(quot)
}

fn b_content_int(a: &BPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(&u_content(c));
        if g.is_one() {
            break;
        }
    }
    g
}

fn b_div_int(a: &BPoly, c: &BigInt) -> BPoly {
    a.iter().map(|u| u_div_scalar(u, c)).collect()
}

fn b_maxnorm(a: &BPoly) -> BigInt {
    a.iter().map(u_maxnorm).max().unwrap_or_default()
}

fn b_lambda_degree(a: &BPoly) -> usize {
    a.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
}

fn b_eval_lambda(a: &BPoly, xi: &BigInt) -> UPoly {
    let mut out: UPoly = a.iter().map(|c| u_eval(c, xi)).collect();
    u_trim(&mut out);
    out
}

/// Transpose-free view of `a` as a polynomial in Λ when it is free of `s`.
fn b_as_lambda_poly(a: &BPoly) -> Option<UPoly> {
    if a.len() <= 1 {
        Some(a.first().cloned().unwrap_or_default())
    } else {
        None
    }
}

fn b_as_s_poly(a: &BPoly) -> Option<UPoly> {
    if b_lambda_degree(a) == 0 {
        let mut out: UPoly = a
            .iter()
            .map(|c| c.first().cloned().unwrap_or_default())
            .collect();
        u_trim(&mut out);
        Some(out)
    } else {
        None
    }
}

fn b_from_s_poly(u: &UPoly) -> BPoly {
    let mut out: BPoly = u
        .iter()
        .map(|c| {
            if c.is_zero() {
                Vec::new()
            } else {
                vec![c.clone()]
            }
        })
        .collect();
    b_trim(&mut out);
    out
}

fn b_gcd_heu(a: &BPoly, b: &BPoly, tries: usize) -> Option<BPoly> {
    let mut xi = heu_start(&b_maxnorm(a), &b_maxnorm(b));
    let degree = b_lambda_degree(a).max(b_lambda_degree(b));
    for _ in 0..tries {
        if too_large(&xi, degree.max(a.len()).max(b.len())) {
            return None;
        }
        let ga = b_eval_lambda(a, &xi);
        let gb = b_eval_lambda(b, &xi);
        if ga.is_empty() || gb.is_empty() {
            xi = heu_next(&xi);
            continue;
        }
        let gamma = u_gcd_with(&ga, &gb, tries);
        let mut g: BPoly = gamma
            .into_iter()
            .map(|c| symmetric_digits(c, &xi))
            .collect();
        b_trim(&mut g);
        if !g.is_empty() {
            let c = b_content_int(&g);
            g = b_div_int(&g, &c);
            if b_divexact(a, &g).is_some() && b_divexact(b, &g).is_some() {
                return Some(g);
            }
        }
        xi = heu_next(&xi);
    }
    None
}

fn b_content_lambda(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_lambda(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter()
        .map(|u| u_divexact(u, c).expect("content divides every coefficient"))
        .collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        let mut next: BPoly = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] = u_sub(&next[shift + j], &u_mul(&lr, bj));
        }
        b_trim(&mut next);
        r = next;
    }
    r
}

fn b_gcd_prs(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = b_content_lambda(a);
    let cb = b_content_lambda(b);
    let content = u_gcd(&ca, &cb);
    let mut x = b_div_lambda(a, &ca);
    let mut y = b_div_lambda(b, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() {
            r
        } else {
            let c = b_content_lambda(&r);
            b_div_lambda(&r, &c)
        };
    }
    x.iter().map(|u| u_mul(u, &content)).collect()
}

/// gcd over Z[s, Λ]; sign normalization is left to the caller.
pub(crate) fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    b_gcd_with(a, b, HEU_TRIES)
}

pub(crate) fn b_gcd_with(a: &BPoly, b: &BPoly, tries: usize) -> BPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    if let (Some(ua), Some(ub)) = (b_as_s_poly(a), b_as_s_poly(b)) {
        return b_from_s_poly(&u_gcd_with(&ua, &ub, tries));
    }
    if let (Some(ua), Some(ub)) = (b_as_lambda_poly(a), b_as_lambda_poly(b)) {
        let g = u_gcd_with(&ua, &ub, tries);
        return if g.is_empty() { Vec::new() } else { vec![g] };
    }
    let ca = b_content_int(a);
    let cb = b_content_int(b);
    let c = ca.gcd(&cb);
    let pa = b_div_int(a, &ca);
    let pb = b_div_int(b, &cb);
    let g = b_gcd_heu(&pa, &pb, tries).unwrap_or_else(|| b_gcd_prs(&pa, &pb));
    g.iter().map(|u| u_scale(u, &c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        u_trim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_heuristic_and_prs_agree() {
        // (x-1)(x+2)^2 and (x-1)(x+3)
        let a = u_mul(&u_mul(&up(&[-1, 1]), &up(&[2, 1])), &up(&[2, 1]));
        let b = u_mul(&up(&[-1, 1]), &up(&[3, 1]));
        assert_eq!(u_gcd(&a, &b), up(&[-1, 1]));
        assert_eq!(u_gcd_with(&a, &b, 0), up(&[-1, 1]));
    }

    #[test]
    fn univariate_gcd_keeps_integer_content() {
        let a = up(&[6, 6]);
        let b = up(&[-4, 0, 4]);
        assert_eq!(u_gcd(&a, &b), up(&[2, 2]));
        assert_eq!(u_gcd_with(&a, &b, 0), up(&[2, 2]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = up(&[-1, 0, 1]);
        assert_eq!(u_divexact(&a, &up(&[1, 1])), Some(up(&[-1, 1])));
        assert_eq!(u_divexact(&a, &up(&[2, 1])), None);
        assert_eq!(u_divexact(&up(&[1, 2]), &up(&[0, 2])), None);
    }

    #[test]
    fn bivariate_gcd_heuristic_and_prs_agree() {
        // (s - Λ)(1 + s Λ) and (s - Λ)(2 + s^2)
        let common: BPoly = vec![up(&[0, -1]), up(&[1])];
        let f1: BPoly = vec![up(&[1]), up(&[0, 1])];
        let f2: BPoly = vec![up(&[2]), vec![], up(&[1])];
        let a = b_mul(&common, &f1);
        let b = b_mul(&common, &f2);
        let heu = b_gcd(&a, &b);
        let prs = b_gcd_with(&a, &b, 0);
        assert!(b_divexact(&heu, &common).is_some_and(|q| q.len() == 1 && q[0].len() == 1));
        assert!(b_divexact(&prs, &common).is_some_and(|q| q.len() == 1 && q[0].len() == 1));
    }

    #[test]
    fn symmetric_digits_reconstruct() {
        let xi = BigInt::from(101);
        let v = BigInt::from(-3 * 101 * 101 + 50 * 101 - 7);
        assert_eq!(symmetric_digits(v, &xi), up(&[-7, 50, -3]));
    }
}
