use std::f64::consts::PI;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, RatPoly};
use super::{Backend, Field, Scalar, Sign};
use crate::{Error, Result};

/// Monic minimal polynomial of `c = 2cos(pi/L)` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub l: u32,
    /// Integer coefficients, constant term first.
    pub coefficients: Vec<BigInt>,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Minimal polynomial of `2cos(pi/L)`.
///
/// `Phi_{2L}` is palindromic of even degree for `L >= 2`, so it factors as
/// `z^{d/2} psi(z + 1/z)` and `psi` is the answer. `L = 1` is special-cased
/// since `2cos(pi) = -2` is rational and `Phi_2` has odd degree.
pub fn build_ring(l: u32) -> MinimalPolynomial {
    assert!(l >= 1, "ring parameter must be positive");
    let coefficients = if l == 1 {
        vec![BigInt::from(2), BigInt::one()]
    } else {
        poly::palindromic_to_trace(&poly::cyclotomic(2 * l))
    };
    MinimalPolynomial { l, coefficients }
}

struct RingInner {
    minpoly: MinimalPolynomial,
    modulus: RatPoly,
    approx: f64,
    /// Isolating interval for `c`, narrowed as sign queries demand.
    enclosure: RwLock<(BigRational, BigRational)>,
    /// Sign of `psi` at the left end of any isolating interval.
    left_sign: Sign,
}

/// Shared handle to the field `Q(2cos(pi/L))`.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring(L={})", self.l())
    }
}

fn rat_sign(x: &BigRational) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

impl Ring {
    pub fn new(l: u32) -> Ring {
        let minpoly = build_ring(l);
        let modulus = poly::to_rat(&minpoly.coefficients);
        let approx = 2.0 * (PI / l as f64).cos();

        let (enclosure, left_sign) = if minpoly.degree() == 1 {
            let root = -&modulus[0];
            ((root.clone(), root), Sign::Zero)
        } else {
            let mut eps = 1e-9;
            loop {
                let lo = BigRational::from_float(approx - eps).expect("finite");
                let hi = BigRational::from_float(approx + eps).expect("finite");
                let s_lo = rat_sign(&poly::eval(&modulus, &lo));
                let s_hi = rat_sign(&poly::eval(&modulus, &hi));
                if s_lo != Sign::Zero && s_lo == s_hi.flip() {
                    break ((lo, hi), s_lo);
                }
                eps *= 10.0;
                assert!(eps < 1e-3, "could not isolate 2cos(pi/{l})");
            }
        };

        Ring(Arc::new(RingInner {
            minpoly,
            modulus,
            approx,
            enclosure: RwLock::new(enclosure),
            left_sign,
        }))
    }

    /// The smallest ring containing `2cos(pi/m)` for every label: `L` is the
    /// lcm of the labels `>= 3`, or 3 when there are none.
    pub fn for_labels(labels: impl IntoIterator<Item = u32>) -> Ring {
        let l = labels
            .into_iter()
            .filter(|&m| m >= 3)
            .fold(1u32, |acc, m| acc.lcm(&m));
        Ring::new(if l == 1 { 3 } else { l })
    }

    pub fn l(&self) -> u32 {
        self.0.minpoly.l
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.degree()
    }

    pub fn minimal_polynomial(&self) -> &MinimalPolynomial {
        &self.0.minpoly
    }

    /// Float value of the generator `c`.
    pub fn generator_approx(&self) -> f64 {
        self.0.approx
    }

    pub fn enclosure(&self) -> (BigRational, BigRational) {
        self.0.enclosure.read().unwrap().clone()
    }

    fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.l() == other.l()
    }

    pub fn scalar(&self, coeffs: Vec<BigRational>) -> AlgebraicScalar {
        let (_, mut rem) = poly::div_rem(&coeffs, &self.0.modulus);
        rem.resize(self.degree(), BigRational::zero());
        AlgebraicScalar {
            ring: self.clone(),
            coeffs: rem,
        }
    }

    pub fn constant(&self, value: BigRational) -> AlgebraicScalar {
        self.scalar(vec![value])
    }

    /// The generator `c = 2cos(pi/L)`.
    pub fn generator(&self) -> AlgebraicScalar {
        self.scalar(vec![BigRational::zero(), BigRational::one()])
    }

    /// `2cos(pi/m)` via the Chebyshev recursion `p_{k+1} = c p_k - p_{k-1}`
    /// evaluated at `k = L/m`.
    pub fn embed_cos(&self, m: u32) -> Result<AlgebraicScalar> {
        let l = self.l();
        if m == 0 || !l.is_multiple_of(m) {
            return Err(Error::LabelNotInRing { m, l });
        }
        let k = l / m;
        let c = self.generator();
        let mut prev = self.constant(BigRational::from_integer(2.into()));
        let mut cur = c.clone();
        for _ in 1..k {
            let next = c.clone() * cur.clone() - prev;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }
}

/// Element of `Q(c)`, stored as a polynomial in `c` of degree below
/// `deg(psi_L)`.
#[derive(Clone)]
pub struct AlgebraicScalar {
    ring: Ring,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("c")?,
                _ => write!(f, "c^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl PartialEq for AlgebraicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ring.l() == other.ring.l() && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraicScalar {}

impl Hash for AlgebraicScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.l().hash(state);
        self.coeffs.hash(state);
    }
}

impl AlgebraicScalar {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn inverse(&self) -> Result<AlgebraicScalar> {
        if self.coeffs.iter().all(Zero::is_zero) {
            return Err(Error::DivisionByZero);
        }
        let inv = poly::inverse_mod(&self.coeffs, &self.ring.0.modulus)
            .expect("minimal polynomial is irreducible");
        Ok(self.ring.scalar(inv))
    }

    fn check_ring(&self, other: &AlgebraicScalar) {
        assert!(
            self.ring.same(&other.ring),
            "scalars from Q(2cos(pi/{})) and Q(2cos(pi/{})) cannot be combined",
            self.ring.l(),
            other.ring.l()
        );
    }

    /// Decides the sign under the real embedding `c = 2cos(pi/L)` by interval
    /// evaluation on a bisection-refined rational enclosure of `c`.
    fn exact_sign(&self) -> Sign {
        let mut p = self.coeffs.clone();
        poly::trim(&mut p);
        match p.len() {
            0 => return Sign::Zero,
            1 => return rat_sign(&p[0]),
            _ => {}
        }
        let inner = &self.ring.0;
        let (mut lo, mut hi) = inner.enclosure.read().unwrap().clone();
        let two = BigRational::from_integer(2.into());
        let mut refined = false;
        let sign = loop {
            let (a, b) = poly::eval_interval(&p, &lo, &hi);
            if a.is_positive() {
                break Sign::Positive;
            }
            if b.is_negative() {
                break Sign::Negative;
            }
            let mid = (&lo + &hi) / &two;
            let s = rat_sign(&poly::eval(&inner.modulus, &mid));
            debug_assert_ne!(s, Sign::Zero, "irreducible psi has no rational root");
            if s == inner.left_sign {
                lo = mid;
            } else {
                hi = mid;
            }
            refined = true;
        };
        if refined {
            let mut guard = inner.enclosure.write().unwrap();
            if &hi - &lo < &guard.1 - &guard.0 {
                *guard = (lo, hi);
            }
        }
        sign
    }
}

impl Add for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(mut self, rhs: AlgebraicScalar) -> AlgebraicScalar {
        self.check_ring(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(mut self, rhs: AlgebraicScalar) -> AlgebraicScalar {
        self.check_ring(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Mul for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, rhs: AlgebraicScalar) -> AlgebraicScalar {
        self.check_ring(&rhs);
        let prod = poly::mul(&self.coeffs, &rhs.coeffs);
        self.ring.scalar(prod)
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(mut self) -> AlgebraicScalar {
        for a in self.coeffs.iter_mut() {
            *a = -a.clone();
        }
        self
    }
}

impl Scalar for AlgebraicScalar {
    type Key = Vec<BigRational>;

    fn sign(&self) -> Sign {
        self.exact_sign()
    }

    fn to_f64(&self) -> f64 {
        poly::eval_f64(&self.coeffs, self.ring.generator_approx())
    }

    fn key(&self) -> Vec<BigRational> {
        self.coeffs.clone()
    }

    fn render(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Exact coordinate field for one Coxeter graph.
#[derive(Debug, Clone)]
pub struct ExactField {
    ring: Ring,
}

impl ExactField {
    pub fn new(ring: Ring) -> Self {
        ExactField { ring }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
}

impl Field for ExactField {
    type Elem = AlgebraicScalar;

    fn backend(&self) -> Backend {
        Backend::Exact
    }

    fn rational(&self, num: i64, den: i64) -> AlgebraicScalar {
        self.ring
            .constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn two_cos_pi_over(&self, m: u32) -> Result<AlgebraicScalar> {
        self.ring.embed_cos(m)
    }
}
