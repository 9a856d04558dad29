//! Points, lines and the incidence/apartness algebra of the rational
//! projective plane.
//!
//! Points and lines are both backed by [`HVec`]; the role tag decides how a
//! triple is read. Dualizing is a reinterpretation of the same coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GeomError, Result};
use crate::hvec::{self, HVec, Vec3};

/// A point `<p1, p2, p3>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(HVec);

/// A line `[l1, l2, l3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line(HVec);

macro_rules! role_common {
    ($t:ident, $dual:ident) => {
        impl $t {
            pub fn new(
                x: impl Into<BigInt>,
                y: impl Into<BigInt>,
                z: impl Into<BigInt>,
            ) -> Result<Self> {
                HVec::new(x, y, z).map($t)
            }

            pub fn from_hvec(v: HVec) -> Self {
                $t(v)
            }

            pub fn from_ints(v: Vec3) -> Result<Self> {
                HVec::from_ints(v).map($t)
            }

            pub fn hvec(&self) -> &HVec {
                &self.0
            }

            pub fn coords(&self) -> &Vec3 {
                self.0.coords()
            }

            /// Apartness: the cross product of the coordinate vectors is nonzero.
            pub fn apart(&self, other: &$t) -> bool {
                !hvec::is_zero(&self.0.cross(&other.0))
            }

            /// The same coordinates read in the dual role.
            pub fn dual(&self) -> $dual {
                $dual(self.0.clone())
            }
        }
    };
}

role_common!(Point, Line);
role_common!(Line, Point);

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

pub fn point_apart(p: &Point, q: &Point) -> bool {
    p.apart(q)
}

pub fn line_apart(l: &Line, m: &Line) -> bool {
    l.apart(m)
}

/// The line through two apart points.
pub fn join(p: &Point, q: &Point) -> Result<Line> {
    Line::from_ints(p.0.cross(&q.0)).map_err(|_| GeomError::NotApart("join"))
}

/// The common point of two apart lines.
pub fn meet(l: &Line, m: &Line) -> Result<Point> {
    Point::from_ints(l.0.cross(&m.0)).map_err(|_| GeomError::NotApart("meet"))
}

pub fn incident(p: &Point, l: &Line) -> bool {
    p.0.dot(&l.0).is_zero()
}

/// `p` lies outside `l`: the dot product is apart from zero.
pub fn outside(p: &Point, l: &Line) -> bool {
    !incident(p, l)
}

/// Which of the two apart reference elements the third one is apart from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cotransitive {
    /// `r` is apart from the first element.
    FirstApart,
    /// `r` is apart from the second element.
    SecondApart,
}

/// Given `p` apart from `q`, decide a branch of `r != p or r != q`.
/// The first branch wins whenever it holds.
pub fn cotransitive_pick(p: &Point, q: &Point, r: &Point) -> Result<Cotransitive> {
    if !p.apart(q) {
        return Err(GeomError::NotApart("cotransitivity"));
    }
    Ok(if r.apart(p) {
        Cotransitive::FirstApart
    } else {
        Cotransitive::SecondApart
    })
}

/// Line version of [`cotransitive_pick`].
pub fn cotransitive_pick_lines(l: &Line, m: &Line, n: &Line) -> Result<Cotransitive> {
    cotransitive_pick(&l.dual(), &m.dual(), &n.dual())
}

/// The canonical basis pair of the subspace orthogonal to `v`: the first
/// two apart vectors among `v x e3`, `v x e2`, `v x e1`.
fn orth_basis(v: &HVec) -> (HVec, HVec) {
    let e = |i: usize| -> Vec3 {
        let mut u: Vec3 = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        u[i] = BigInt::from(1);
        u
    };
    let cands: Vec<HVec> = [2usize, 1, 0]
        .into_iter()
        .filter_map(|i| HVec::from_ints(hvec::cross(v.coords(), &e(i))).ok())
        .collect();
    for (i, a) in cands.iter().enumerate() {
        for b in &cands[i + 1..] {
            if !hvec::is_zero(&a.cross(b)) {
                return (a.clone(), b.clone());
            }
        }
    }
    unreachable!("a nonzero vector has a two-dimensional orthogonal complement")
}

fn combine(q: &HVec, r: &HVec, t: &BigInt) -> HVec {
    let v = [0, 1, 2].map(|i| &q.coords()[i] + t * &r.coords()[i]);
    HVec::from_ints(v).expect("basis vectors are independent")
}

/// Canonical basis points `(q, r)` of the range of `l`.
pub fn line_basis(l: &Line) -> (Point, Point) {
    let (q, r) = orth_basis(&l.0);
    (Point(q), Point(r))
}

/// The point `<q + t r>` of `l` for its canonical basis `(q, r)`.
pub fn point_on(l: &Line, t: &BigInt) -> Point {
    let (q, r) = orth_basis(&l.0);
    Point(combine(&q, &r, t))
}

fn fresh_on(l: &HVec, avoid: &[&HVec]) -> HVec {
    let (q, r) = orth_basis(l);
    let relevant: Vec<&&HVec> = avoid.iter().filter(|a| a.dot(l).is_zero()).collect();
    let mut t = BigInt::zero();
    loop {
        let cand = combine(&q, &r, &t);
        if relevant.iter().all(|a| !hvec::is_zero(&cand.cross(a))) {
            return cand;
        }
        t += 1;
    }
}

/// The first point `<q + t r>`, `t = 0, 1, 2, ...`, of `l` apart from every
/// point of `avoid` lying on `l`. Points of `avoid` off `l` are ignored.
pub fn fresh_point_on(l: &Line, avoid: &[Point]) -> Point {
    let avoid: Vec<&HVec> = avoid.iter().map(|p| &p.0).collect();
    Point(fresh_on(&l.0, &avoid))
}

/// `n` pairwise-apart points of `l`, each apart from `avoid`, in scan order.
pub fn fresh_points_on(l: &Line, avoid: &[Point], n: usize) -> Vec<Point> {
    let mut taken: Vec<Point> = avoid.to_vec();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let p = fresh_point_on(l, &taken);
        taken.push(p.clone());
        out.push(p);
    }
    out
}

/// Dual of [`fresh_point_on`]: a line through `p` apart from the given lines
/// through `p`.
pub fn fresh_line_through(p: &Point, avoid: &[Line]) -> Line {
    let avoid: Vec<&HVec> = avoid.iter().map(|l| &l.0).collect();
    Line(fresh_on(&p.0, &avoid))
}

/// Fixed pool of auxiliary points `<1, t, t^2>` for `t` in `start..start + 6`.
///
/// The pool points lie on a conic, so a line holds at most two of them and
/// any two lines exclude at most four.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxPool {
    pub start: i64,
}

impl AuxPool {
    pub const PRIMARY: AuxPool = AuxPool { start: 0 };
    pub const SHIFTED: AuxPool = AuxPool { start: 7 };
    pub const LEN: i64 = 6;

    pub fn points(&self) -> impl Iterator<Item = Point> {
        (self.start..self.start + Self::LEN)
            .map(|t| Point::new(1, t, t * t).expect("first coordinate is 1"))
    }

    /// First pool point outside every line in `lines` (at most two lines
    /// are guaranteed to leave a survivor).
    pub fn first_outside(&self, lines: &[&Line]) -> Option<Point> {
        self.points().find(|p| lines.iter().all(|l| outside(p, l)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> Point {
        Point::new(x, y, z).unwrap()
    }

    fn ln(x: i64, y: i64, z: i64) -> Line {
        Line::new(x, y, z).unwrap()
    }

    #[test]
    fn apartness_examples() {
        // <0,0,1> vs <a,0,1>: cross product (0, a, 0)
        let p = pt(0, 0, 1);
        assert!(!p.apart(&p));
        assert!(p.apart(&pt(3, 0, 1)));
        assert!(!p.apart(&pt(0, 0, 5)));
        assert!(pt(1, 0, 0).apart(&pt(0, 1, 0)));
    }

    #[test]
    fn join_and_meet_examples() {
        assert_eq!(join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ln(0, 0, 1));
        assert_eq!(meet(&ln(0, 0, 1), &ln(0, 1, 0)).unwrap(), pt(1, 0, 0));
        let l = join(&pt(1, 1, 1), &pt(1, 0, 0)).unwrap();
        assert_eq!(l, ln(0, 1, -1));
        assert!(incident(&pt(1, 1, 1), &l) && incident(&pt(1, 0, 0), &l));
    }

    #[test]
    fn join_requires_apart_points() {
        assert_eq!(
            join(&pt(1, 2, 3), &pt(2, 4, 6)),
            Err(GeomError::NotApart("join"))
        );
        assert_eq!(meet(&ln(1, 1, 0), &ln(1, 1, 0)), Err(GeomError::NotApart("meet")));
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt(1, 0, 0), &ln(0, 0, 1)));
        assert!(!incident(&pt(1, 1, 1), &ln(1, -1, -1)));
        assert!(outside(&pt(0, 1, 1), &ln(1, -1, -1)));
        assert!(outside(&pt(1, 1, 1), &ln(0, 0, 1)));
        assert!(!outside(&pt(5, 7, 0), &ln(0, 0, 1)));
    }

    #[test]
    fn cotransitive_examples() {
        let (p, q) = (pt(1, 0, 0), pt(0, 1, 0));
        assert_eq!(cotransitive_pick(&p, &q, &pt(0, 0, 1)), Ok(Cotransitive::FirstApart));
        assert_eq!(cotransitive_pick(&p, &q, &p), Ok(Cotransitive::SecondApart));
        assert_eq!(cotransitive_pick(&p, &q, &pt(0, 0, 7)), Ok(Cotransitive::FirstApart));
        assert_eq!(cotransitive_pick(&p, &q, &pt(2, 3, 4)), Ok(Cotransitive::FirstApart));
        assert!(cotransitive_pick(&p, &p, &q).is_err());
    }

    #[test]
    fn dualize_is_coordinate_identity() {
        let p = pt(1, 2, 3);
        assert_eq!(p.dual(), ln(1, 2, 3));
        assert_eq!(p.dual().dual(), p);
        let q = pt(-1, 4, 0);
        assert_eq!(join(&p, &q).unwrap().dual(), meet(&p.dual(), &q.dual()).unwrap());
    }

    #[test]
    fn line_basis_of_ideal_line() {
        assert_eq!(line_basis(&ln(0, 0, 1)), (pt(1, 0, 0), pt(0, 1, 0)));
    }

    #[test]
    fn fresh_point_scan() {
        let l = ln(0, 0, 1);
        assert_eq!(fresh_point_on(&l, &[pt(1, 0, 0), pt(0, 1, 0)]), pt(1, 1, 0));
        assert_eq!(fresh_point_on(&l, &[]), pt(1, 0, 0));
        // points off the line are ignored
        assert_eq!(fresh_point_on(&l, &[pt(1, 1, 1)]), pt(1, 0, 0));
    }

    #[test]
    fn fresh_points_pairwise_apart() {
        let l = ln(2, -3, 5);
        let mut avoid = vec![];
        for _ in 0..6 {
            let p = fresh_point_on(&l, &avoid);
            assert!(incident(&p, &l));
            assert!(avoid.iter().all(|a: &Point| a.apart(&p)));
            avoid.push(p);
        }
    }

    #[test]
    fn pool_survivor_for_two_lines() {
        let pool = AuxPool::PRIMARY;
        // a line through two pool points and another through two more
        let pts: Vec<Point> = pool.points().collect();
        let l1 = join(&pts[0], &pts[1]).unwrap();
        let l2 = join(&pts[2], &pts[3]).unwrap();
        assert_eq!(pool.first_outside(&[&l1, &l2]), Some(pts[4].clone()));
    }
}
