//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficient vectors are stored lowest degree first. Everything here is
//! small-degree (at most a few dozen terms) so the schoolbook algorithms are
//! used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type IntPoly = Vec<BigInt>;
pub(crate) type RatPoly = Vec<BigRational>;

fn trim_int(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division of integer polynomials where `den` is monic.
fn div_exact_monic(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, c) in den.iter().enumerate() {
            rem[k + i] -= &lead * c;
        }
        quot[k] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    trim_int(&mut quot);
    quot
}

/// The `n`-th cyclotomic polynomial, via `z^n - 1 = prod_{d | n} Phi_d(z)`.
pub(crate) fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1);
    let mut table: Vec<Option<IntPoly>> = vec![None; n as usize + 1];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut p: IntPoly = vec![BigInt::zero(); d as usize + 1];
        p[0] = BigInt::from(-1);
        p[d as usize] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                let q = table[e as usize]
                    .as_ref()
                    .expect("divisors are filled in order");
                p = div_exact_monic(&p, q);
            }
        }
        table[d as usize] = Some(p);
    }
    table[n as usize].take().unwrap()
}

/// Rewrites a palindromic polynomial of even degree `2h` as
/// `z^h * psi(z + 1/z)` and returns `psi`.
///
/// `z^k + z^-k` is expanded with the recursion `q_0 = 2, q_1 = x,
/// q_{k+1} = x q_k - q_{k-1}`; the middle coefficient contributes a
/// constant.
pub(crate) fn palindromic_to_trace(p: &IntPoly) -> IntPoly {
    let d = p.len() - 1;
    assert!(
        d.is_multiple_of(2),
        "palindromic polynomial must have even degree"
    );
    let h = d / 2;
    let mut out: IntPoly = vec![BigInt::zero(); h + 1];
    out[0] += &p[h];
    // q_prev = q_{k-1}, q_cur = q_k as polynomials in x
    let mut q_prev: IntPoly = vec![BigInt::from(2)];
    let mut q_cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for k in 1..=h {
        debug_assert_eq!(p[h + k], p[h - k], "input is not palindromic");
        for (i, c) in q_cur.iter().enumerate() {
            out[i] += &p[h + k] * c;
        }
        let mut next: IntPoly = vec![BigInt::zero(); q_cur.len() + 1];
        for (i, c) in q_cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in q_prev.iter().enumerate() {
            next[i] -= c;
        }
        q_prev = std::mem::replace(&mut q_cur, next);
    }
    trim_int(&mut out);
    out
}

pub(crate) fn to_rat(p: &IntPoly) -> RatPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    out
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let neg: RatPoly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Polynomial division with remainder. `b` must be nonzero after trimming.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let coef = &rem[k + db] * &lead_inv;
        if coef.is_zero() {
            continue;
        }
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &coef * c;
        }
        quot[k] = coef;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`. Returns `None` when
/// the gcd is not a unit.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<RatPoly> {
    // invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: RatPoly = Vec::new();
    let mut s1: RatPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: RatPoly = s0.iter().map(|x| x * &c).collect();
    let (_, rem) = div_rem(&inv, m);
    inv = rem;
    Some(inv)
}

/// Evaluates a rational polynomial at a rational point (Horner).
pub(crate) fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Evaluates over the closed interval `[lo, hi]`, returning an enclosure of
/// the image.
pub(crate) fn eval_interval(
    p: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in p.iter().rev() {
        let prods = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut mn = prods[0].clone();
        let mut mx = prods[0].clone();
        for v in &prods[1..] {
            if *v < mn {
                mn = v.clone();
            }
            if *v > mx {
                mx = v.clone();
            }
        }
        acc_lo = mn + c;
        acc_hi = mx + c;
    }
    (acc_lo, acc_hi)
}

pub(crate) fn eval_f64(p: &[BigRational], x: f64) -> f64 {
    use num_traits::ToPrimitive;
    p.iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(10), ints(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_105_has_a_two() {
        let p = cyclotomic(105);
        assert_eq!(p.len(), 49);
        assert!(p.iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn trace_form_of_phi_10() {
        // z^4 - z^3 + z^2 - z + 1 = z^2 (x^2 - x - 1) with x = z + 1/z
        assert_eq!(palindromic_to_trace(&cyclotomic(10)), ints(&[-1, -1, 1]));
    }

    #[test]
    fn inverse_mod_quadratic() {
        // (x) * (x - 1) = x^2 - x = 1 mod x^2 - x - 1
        let m = to_rat(&ints(&[-1, -1, 1]));
        let a = to_rat(&ints(&[0, 1]));
        let inv = inverse_mod(&a, &m).unwrap();
        assert_eq!(inv, to_rat(&ints(&[-1, 1])));
    }
}
