use std::ops::{Add, Mul, Neg, Sub};

use super::{Backend, Field, Scalar, Sign};
use crate::Result;

/// Magnitudes below this are treated as zero by [`FloatScalar::sign`].
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FloatScalar(pub f64);

impl Add for FloatScalar {
    type Output = FloatScalar;
    fn add(self, rhs: FloatScalar) -> FloatScalar {
        FloatScalar(self.0 + rhs.0)
    }
}

impl Sub for FloatScalar {
    type Output = FloatScalar;
    fn sub(self, rhs: FloatScalar) -> FloatScalar {
        FloatScalar(self.0 - rhs.0)
    }
}

impl Mul for FloatScalar {
    type Output = FloatScalar;
    fn mul(self, rhs: FloatScalar) -> FloatScalar {
        FloatScalar(self.0 * rhs.0)
    }
}

impl Neg for FloatScalar {
    type Output = FloatScalar;
    fn neg(self) -> FloatScalar {
        FloatScalar(-self.0)
    }
}

impl Scalar for FloatScalar {
    type Key = i64;

    fn sign(&self) -> Sign {
        if self.0.abs() < FLOAT_TOLERANCE {
            Sign::Zero
        } else if self.0 > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn key(&self) -> i64 {
        (self.0 * 1e6).round() as i64
    }

    fn render(&self) -> Vec<String> {
        vec![format!("{}", self.0)]
    }
}

/// Double-precision stand-in for [`super::ExactField`]. Never used for verdicts.
#[derive(Debug, Clone, Copy, Default)]
pub struct FloatField;

impl Field for FloatField {
    type Elem = FloatScalar;

    fn backend(&self) -> Backend {
        Backend::Float
    }

    fn rational(&self, num: i64, den: i64) -> FloatScalar {
        FloatScalar(num as f64 / den as f64)
    }

    fn two_cos_pi_over(&self, m: u32) -> Result<FloatScalar> {
        Ok(FloatScalar(2.0 * (std::f64::consts::PI / m as f64).cos()))
    }
}
