//! 3x3 integer matrices taken up to a nonzero scale factor.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::hvec::Vec3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3::from_fn(|i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> BigInt) -> Self {
        Mat3([0, 1, 2].map(|i| [0, 1, 2].map(|j| f(i, j))))
    }

    /// `s I + a b^T`
    pub fn scaled_identity_plus_outer(s: &BigInt, a: &Vec3, b: &Vec3) -> Self {
        Mat3::from_fn(|i, j| {
            let d = if i == j { s.clone() } else { BigInt::zero() };
            d + &a[i] * &b[j]
        })
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum()).reduced()
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        [0, 1, 2].map(|i| (0..3).map(|k| &self.0[i][k] * &v[k]).sum())
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Adjugate; equals `det * inverse`, hence the inverse up to scale.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        let c = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        Mat3([
            [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
            [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
            [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
        ])
        .reduced()
    }

    /// Divide by the gcd of the entries; first nonzero entry positive.
    pub fn reduced(self) -> Mat3 {
        let g = self
            .0
            .iter()
            .flatten()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return self;
        }
        let neg = self
            .0
            .iter()
            .flatten()
            .find(|x| !x.is_zero())
            .is_some_and(Signed::is_negative);
        let g = if neg { -g } else { g };
        Mat3(self.0.map(|row| row.map(|x| x / &g)))
    }
}

impl fmt::Display for Mat3 {
    /// Row-major: `[[a, b, c], [d, e, f], [g, h, i]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}
