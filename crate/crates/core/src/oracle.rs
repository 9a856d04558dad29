//! Coordinate oracles: quadratic forms, determinants, cross-ratios and
//! direct homography solves by exact linear algebra.
//!
//! These are deliberately independent of the synthetic constructions and
//! exist to check them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::hvec::HVec;
use crate::plane::{Line, Point};
use crate::scalar::Scalar;

type Rows = Vec<Vec<BigRational>>;

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut Rows) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Integer vector proportional to a rational one: clear denominators,
/// divide by the gcd, first nonzero entry positive.
fn integral(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * rat(&l)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    let g = if neg { -g } else { g };
    ints.into_iter().map(|x| x / &g).collect()
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    let mut total = BigInt::zero();
    for (perm, sign) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ] {
        let term = &m[0][perm[0]] * &m[1][perm[1]] * &m[2][perm[2]];
        if sign > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// A ternary quadratic form `x^T A x`, stored as the integer matrix `2A`
/// reduced to coprime entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    m: [[BigInt; 3]; 3],
}

impl QuadraticForm {
    /// Form `a x^2 + b y^2 + c z^2 + d xy + e yz + f zx`.
    pub fn from_coefficients(c: [BigInt; 6]) -> Result<Self> {
        let [a, b, cc, d, e, f] = c;
        let m = [
            [&a * 2, d.clone(), f.clone()],
            [d, &b * 2, e.clone()],
            [f, e, &cc * 2],
        ];
        let flat: Vec<BigRational> = m.iter().flatten().map(rat).collect();
        let ints = integral(&flat);
        if ints.iter().all(Zero::is_zero) {
            return Err(GeomError::ZeroVector);
        }
        let mut it = ints.into_iter();
        Ok(QuadraticForm {
            m: [0, 1, 2].map(|_| [0, 1, 2].map(|_| it.next().unwrap())),
        })
    }

    pub fn matrix(&self) -> &[[BigInt; 3]; 3] {
        &self.m
    }

    /// `x^T (2A) x`, a fixed multiple of the form value.
    pub fn eval(&self, p: &Point) -> BigInt {
        let x = p.coords();
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| &x[i] * &self.m[i][j] * &x[j])
            .sum()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn det(&self) -> BigInt {
        det3(&self.m)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    /// `A p`: the polar of `p`, and the tangent when `p` is on the conic.
    pub fn polar(&self, p: &Point) -> Result<Line> {
        let x = p.coords();
        Line::from_ints([0, 1, 2].map(|i| (0..3).map(|j| &self.m[i][j] * &x[j]).sum()))
    }

    /// Pole of `l`: the point `p` with `A p ~ l`, via the adjugate of `A`.
    pub fn pole(&self, l: &Line) -> Result<Point> {
        let m = &self.m;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        let y = l.coords();
        // adj(A) = cof(A)^T, and A is symmetric
        Point::from_ints([0, 1, 2].map(|i| (0..3).map(|j| cof(j, i) * &y[j]).sum()))
    }

    /// `M^T A M`: the form whose zeros are the preimages under `M`.
    pub fn pullback(&self, mm: &[[BigInt; 3]; 3]) -> QuadraticForm {
        let am: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| &self.m[i][k] * &mm[k][j]).sum()).collect())
            .collect();
        let out: Vec<BigRational> = (0..3)
            .flat_map(|i| {
                let am = &am;
                (0..3).map(move |j| rat(&(0..3).map(|k| &mm[k][i] * &am[k][j]).sum()))
            })
            .collect();
        let mut it = integral(&out).into_iter();
        QuadraticForm {
            m: [0, 1, 2].map(|_| [0, 1, 2].map(|_| it.next().unwrap())),
        }
    }
}

/// The unique conic through five points, from the kernel of the 5x6
/// monomial matrix.
pub fn quadratic_form_fit(pts: [&Point; 5]) -> Result<QuadraticForm> {
    let mut rows: Rows = pts
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            [x * x, y * y, z * z, x * y, y * z, z * x].iter().map(rat).collect()
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.len() != 5 {
        return Err(GeomError::DegenerateFive(format!(
            "kernel has dimension {}",
            6 - pivots.len()
        )));
    }
    let free = (0..6).find(|c| !pivots.contains(c)).expect("one free column");
    let mut v = vec![BigRational::zero(); 6];
    v[free] = BigRational::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -rows[r][free].clone();
    }
    let ints = integral(&v);
    let q = QuadraticForm::from_coefficients(ints.try_into().expect("six coefficients"))?;
    if !q.is_nondegenerate() {
        return Err(GeomError::DegenerateFive("fitted form is singular".into()));
    }
    Ok(q)
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    det3(&[p.coords().clone(), q.coords().clone(), r.coords().clone()]).is_zero()
}

pub fn concurrent(l: &Line, m: &Line, n: &Line) -> bool {
    det3(&[l.coords().clone(), m.coords().clone(), n.coords().clone()]).is_zero()
}

/// Coordinates `(s, t)` with `x ~ s a + t b`, by elimination.
fn span_coords(a: &Point, b: &Point, x: &Point) -> Result<(BigRational, BigRational)> {
    let mut rows: Rows = (0..3)
        .map(|i| vec![rat(&a.coords()[i]), rat(&b.coords()[i]), rat(&x.coords()[i])])
        .collect();
    let pivots = rref(&mut rows);
    if pivots != [0, 1] {
        return Err(GeomError::Degenerate("point is not on the line of the pair".into()));
    }
    Ok((rows[0][2].clone(), rows[1][2].clone()))
}

/// Cross-ratio `(A, B; C, D)` of four points on a line.
pub fn cross_ratio(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<Scalar> {
    if !a.apart(b) {
        return Err(GeomError::NotApart("cross-ratio base points"));
    }
    let (sc, tc) = span_coords(a, b, c)?;
    let (sd, td) = span_coords(a, b, d)?;
    if sc.is_zero() || tc.is_zero() || sd.is_zero() || td.is_zero() {
        return Err(GeomError::Degenerate("point coincides with a base point".into()));
    }
    Ok(Scalar::from((tc / sc) / (td / sd)))
}

fn inverse3(m: &[[BigRational; 3]; 3]) -> Result<[[BigRational; 3]; 3]> {
    let mut rows: Rows = (0..3)
        .map(|i| {
            let mut r = m[i].to_vec();
            r.extend((0..3).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    if rref(&mut rows)[..] != [0, 1, 2] {
        return Err(GeomError::Singular);
    }
    Ok([0, 1, 2].map(|i| [0, 1, 2].map(|j| rows[i][j + 3].clone())))
}

/// A plane homography given by a rational matrix.
#[derive(Clone, Debug)]
pub struct Homography {
    m: [[BigRational; 3]; 3],
}

impl Homography {
    pub fn apply(&self, p: &Point) -> Result<Point> {
        let x = p.coords();
        let v: Vec<BigRational> = (0..3)
            .map(|i| (0..3).map(|j| &self.m[i][j] * rat(&x[j])).sum())
            .collect();
        Point::from_ints(integral(&v).try_into().expect("three coordinates"))
    }
}

/// A homography taking three collinear points to three collinear points,
/// fixed by sending the normal of the source line to that of the target.
pub fn homography_solve(src: [&Point; 3], dst: [&Point; 3]) -> Result<Homography> {
    let (s1, s2) = span_coords(src[0], src[1], src[2])?;
    let (t1, t2) = span_coords(dst[0], dst[1], dst[2])?;
    if [&s1, &s2, &t1, &t2].iter().any(|x| x.is_zero()) {
        return Err(GeomError::NotApart("homography triple"));
    }
    let normal = |p: &Point, q: &Point| -> Result<[BigRational; 3]> {
        let n = HVec::from_ints(p.hvec().cross(q.hvec()))?;
        Ok(n.coords().clone().map(|x| rat(&x)))
    };
    let col = |p: &Point, k: &BigRational| p.coords().clone().map(|x| rat(&x) * k);
    // M src0 = (t1 / s1) dst0 and M src1 = (t2 / s2) dst1 send src2 to dst2
    let sources = [
        col(src[0], &BigRational::one()),
        col(src[1], &BigRational::one()),
        normal(src[0], src[1])?,
    ];
    let targets = [
        col(dst[0], &(&t1 / &s1)),
        col(dst[1], &(&t2 / &s2)),
        normal(dst[0], dst[1])?,
    ];
    // columns -> matrices
    let s = [0, 1, 2].map(|i| [0, 1, 2].map(|j| sources[j][i].clone()));
    let t = [0, 1, 2].map(|i| [0, 1, 2].map(|j| targets[j][i].clone()));
    let s_inv = inverse3(&s)?;
    let m = [0, 1, 2].map(|i| {
        [0, 1, 2].map(|j| (0..3).map(|k| &t[i][k] * &s_inv[k][j]).sum::<BigRational>())
    });
    Ok(Homography { m })
}
