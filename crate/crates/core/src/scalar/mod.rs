//! Scalar fields for root coordinates.
//!
//! Two backends sit behind the [`Field`] trait: [`ExactField`], which computes
//! in the real field `Q(2cos(pi/L))`, and [`FloatField`], a 64-bit float
//! implementation that only serves as a cross-check.

mod exact;
mod float;
pub(crate) mod poly;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::Result;

pub use exact::{build_ring, AlgebraicScalar, ExactField, MinimalPolynomial, Ring};
pub use float::{FloatField, FloatScalar, FLOAT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_i32(x: i32) -> Sign {
        match x.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        Sign::of_i32(-self.as_i32())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::of_i32(self.as_i32() * rhs.as_i32())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// An element of one of the coordinate fields.
pub trait Scalar:
    Clone
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Hashable identity used to deduplicate roots.
    type Key: Hash + Eq + Clone + Send + Sync;

    fn sign(&self) -> Sign;
    fn to_f64(&self) -> f64;
    fn key(&self) -> Self::Key;
    /// Coefficients over the field's basis, as strings.
    fn render(&self) -> Vec<String>;

    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }
}

/// Constructors for a coordinate field.
pub trait Field: Send + Sync {
    type Elem: Scalar;

    fn backend(&self) -> Backend;
    fn rational(&self, num: i64, den: i64) -> Self::Elem;
    /// `2cos(pi/m)` as a field element.
    fn two_cos_pi_over(&self, m: u32) -> Result<Self::Elem>;

    fn zero(&self) -> Self::Elem {
        self.rational(0, 1)
    }

    fn one(&self) -> Self::Elem {
        self.rational(1, 1)
    }
}
