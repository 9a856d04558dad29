//! Homogeneous coordinate triples.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

pub type Vec3 = [BigInt; 3];

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn is_zero(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

/// A nonzero triple of integers up to scale, in canonical form.
///
/// The canonical representative has coprime entries and its first nonzero
/// entry is positive, so two triples span the same subspace exactly when
/// they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVec(Vec3);

impl HVec {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        Self::from_ints([x.into(), y.into(), z.into()])
    }

    pub fn from_ints(mut v: Vec3) -> Result<Self> {
        if is_zero(&v) {
            return Err(GeomError::ZeroVector);
        }
        let g = v[0].gcd(&v[1]).gcd(&v[2]);
        let lead_negative = v.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
        for c in v.iter_mut() {
            *c = &*c / &g;
            if lead_negative {
                *c = -&*c;
            }
        }
        Ok(HVec(v))
    }

    /// Clears denominators and canonicalizes.
    pub fn from_scalars(s: &[Scalar; 3]) -> Result<Self> {
        let l = s
            .iter()
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let v = [0, 1, 2].map(|i| s[i].numer() * (&l / s[i].denom()));
        Self::from_ints(v)
    }

    pub fn coords(&self) -> &Vec3 {
        &self.0
    }

    pub fn into_coords(self) -> Vec3 {
        self.0
    }

    pub fn cross(&self, other: &HVec) -> Vec3 {
        cross(&self.0, &other.0)
    }

    pub fn dot(&self, other: &HVec) -> BigInt {
        dot(&self.0, &other.0)
    }
}

impl fmt::Display for HVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.0[0], self.0[1], self.0[2])
    }
}
