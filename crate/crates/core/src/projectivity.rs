//! Projectivities between ranges of points, realized as 3x3 matrices.
//!
//! Constructions follow the synthetic route (projections composed into
//! chains) and are multiplied out immediately, so every map is a single
//! matrix. Pencil maps are range maps of the dual plane.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GeomError, Result};
use crate::harmonic::harmonic_conjugate;
use crate::hvec::{self, Vec3};
use crate::matrix::Mat3;
use crate::plane::{fresh_point_on, fresh_points_on, incident, join, meet, outside, AuxPool, Line, Point};

/// A projectivity from the range of `domain` onto the range of `codomain`.
///
/// The matrix is nonsingular and determined up to scale; only its action
/// on the domain range is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeProjectivity {
    domain: Line,
    codomain: Line,
    matrix: Mat3,
}

impl RangeProjectivity {
    /// Wraps a matrix, checking that it carries the domain range
    /// injectively into the codomain.
    pub fn from_matrix(domain: Line, codomain: Line, matrix: Mat3) -> Result<Self> {
        let f = RangeProjectivity {
            domain,
            codomain,
            matrix: matrix.reduced(),
        };
        if f.matrix.det().is_zero() {
            return Err(GeomError::Singular);
        }
        let images = f
            .samples()
            .iter()
            .map(|x| f.apply(x))
            .collect::<Result<Vec<_>>>()?;
        if images.iter().any(|y| !incident(y, &f.codomain)) {
            return Err(GeomError::Degenerate(
                "matrix does not map the domain into the codomain".into(),
            ));
        }
        Ok(f)
    }

    pub fn identity(line: &Line) -> Self {
        RangeProjectivity {
            domain: line.clone(),
            codomain: line.clone(),
            matrix: Mat3::identity(),
        }
    }

    pub fn domain(&self) -> &Line {
        &self.domain
    }

    pub fn codomain(&self) -> &Line {
        &self.codomain
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    /// Three deterministic, pairwise-apart points of the domain.
    pub fn samples(&self) -> Vec<Point> {
        fresh_points_on(&self.domain, &[], 3)
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        if !incident(x, &self.domain) {
            return Err(GeomError::OffDomain);
        }
        Point::from_ints(self.matrix.apply(x.coords())).map_err(|_| GeomError::Singular)
    }

    /// `self` after `first`.
    pub fn after(&self, first: &RangeProjectivity) -> Result<RangeProjectivity> {
        compose(self, first)
    }

    pub fn inverse(&self) -> RangeProjectivity {
        RangeProjectivity {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: self.matrix.adjugate(),
        }
    }

    /// Agreement on three apart points of a common domain; by the
    /// three-fixed-point axiom this is equality of projectivities.
    pub fn equal(&self, other: &RangeProjectivity) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self
                .samples()
                .iter()
                .all(|x| self.apply(x).ok() == other.apply(x).ok())
    }

    /// Maps a range to itself and fixes three apart points.
    pub fn is_identity(&self) -> bool {
        self.equal(&RangeProjectivity::identity(&self.domain))
    }
}

impl fmt::Display for RangeProjectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {}", self.domain, self.codomain, self.matrix)
    }
}

/// `g` after `f`.
pub fn compose(g: &RangeProjectivity, f: &RangeProjectivity) -> Result<RangeProjectivity> {
    if f.codomain != g.domain {
        return Err(GeomError::ChainMismatch);
    }
    Ok(RangeProjectivity {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        matrix: g.matrix.mul(&f.matrix),
    })
}

/// Composes a chain given in application order.
pub fn compose_chain(chain: &[RangeProjectivity]) -> Result<RangeProjectivity> {
    let (first, rest) = chain
        .split_first()
        .ok_or_else(|| GeomError::Degenerate("empty chain".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| compose(g, &acc))
}

/// Projection of the range of `l` onto `m` from the center `t`:
/// `X -> TX . m`.
///
/// On the domain this is `x -> (t.m) x - (m.x) t`. The extra `(l.x) t`
/// term vanishes on `l` and makes the matrix `(t.m) I + t (l - m)^T`
/// nonsingular, with determinant `(t.m)^2 (t.l)`.
pub fn projection(t: &Point, l: &Line, m: &Line) -> Result<RangeProjectivity> {
    if !outside(t, l) {
        return Err(GeomError::CenterOnLine("domain"));
    }
    if !outside(t, m) {
        return Err(GeomError::CenterOnLine("codomain"));
    }
    let tv = t.coords();
    let s = hvec::dot(tv, m.coords());
    let diff: Vec3 = [0, 1, 2].map(|i| &l.coords()[i] - &m.coords()[i]);
    Ok(RangeProjectivity {
        domain: l.clone(),
        codomain: m.clone(),
        matrix: Mat3::scaled_identity_plus_outer(&s, tv, &diff).reduced(),
    })
}

/// Projection between two apart lines fixing their common point and
/// sending `q -> q2`, `r -> r2`; the center is `QQ2 . RR2`.
pub fn projection_fixing_common(
    l: &Line,
    m: &Line,
    (q, q2): (&Point, &Point),
    (r, r2): (&Point, &Point),
) -> Result<RangeProjectivity> {
    let a = meet(l, m).map_err(|_| GeomError::SameLine)?;
    if !(incident(q, l) && incident(r, l) && incident(q2, m) && incident(r2, m)) {
        return Err(GeomError::OffDomain);
    }
    if ![q, r, q2, r2].iter().all(|p| p.apart(&a)) || !q.apart(r) || !q2.apart(r2) {
        return Err(GeomError::NotApart("projection through two pairs"));
    }
    let center = meet(&join(q, q2)?, &join(r, r2)?)?;
    projection(&center, l, m)
}

/// Two projections carrying `src` on `l` to `dst` on `m`, for apart lines
/// and all six points apart from the common point `O`.
///
/// With `n = P'Q` and `R0 = RR' . n`, the first projection fixes `Q` and
/// sends `P R -> P' R0`; the second fixes `P'` and sends `Q R0 -> Q' R'`.
pub fn two_projection_chain(
    l: &Line,
    m: &Line,
    src: [&Point; 3],
    dst: [&Point; 3],
) -> Result<[RangeProjectivity; 2]> {
    let o = meet(l, m).map_err(|_| GeomError::SameLine)?;
    if src.iter().chain(dst.iter()).any(|p| !p.apart(&o)) {
        return Err(GeomError::NotApart("points must differ from the common point"));
    }
    let [p, q, r] = src;
    let [p2, q2, r2] = dst;
    let n = join(p2, q)?;
    let r0 = meet(&join(r, r2)?, &n)?;
    let first = projection_fixing_common(l, &n, (p, p2), (r, &r0))?;
    let second = projection_fixing_common(&n, m, (q, q2), (&r0, r2))?;
    Ok([first, second])
}

fn check_triple(pts: [&Point; 3]) -> Result<Line> {
    let [a, b, c] = pts;
    if !a.apart(b) || !a.apart(c) || !b.apart(c) {
        return Err(GeomError::NotApart("three-point correspondence"));
    }
    let l = join(a, b)?;
    if !incident(c, &l) {
        return Err(GeomError::OffDomain);
    }
    Ok(l)
}

/// The general six-projection chain through two auxiliary lines, valid
/// whether or not the ranges coincide and wherever their common point is.
pub fn fundamental_chain(src: [&Point; 3], dst: [&Point; 3]) -> Result<Vec<RangeProjectivity>> {
    let l = check_triple(src)?;
    let m = check_triple(dst)?;
    let pool = AuxPool::PRIMARY;
    let exhausted = || GeomError::Degenerate("auxiliary pool exhausted".into());

    let o1 = fresh_point_on(&l, &src.map(Point::clone));
    let l_aux = join(&o1, &pool.first_outside(&[&l]).ok_or_else(exhausted)?)?;
    let o2 = fresh_point_on(&m, &dst.map(Point::clone));
    let m_aux = join(&o2, &pool.first_outside(&[&m, &l_aux]).ok_or_else(exhausted)?)?;
    let o3 = meet(&l_aux, &m_aux)?;
    let mid1 = fresh_points_on(&l_aux, &[o1.clone(), o3.clone()], 3);
    let mid2 = fresh_points_on(&m_aux, &[o2.clone(), o3.clone()], 3);
    let mid1 = [&mid1[0], &mid1[1], &mid1[2]];
    let mid2 = [&mid2[0], &mid2[1], &mid2[2]];

    let mut chain = Vec::with_capacity(6);
    chain.extend(two_projection_chain(&l, &l_aux, src, mid1)?);
    chain.extend(two_projection_chain(&l_aux, &m_aux, mid1, mid2)?);
    chain.extend(two_projection_chain(&m_aux, &m, mid2, dst)?);
    Ok(chain)
}

/// Direct linear solve: columns `(p, q, n)` go to `(a p', b q', n')` with
/// `a, b` fixed by the third pair and `n, n'` the line normals.
fn solve_three_points(src: [&Point; 3], dst: [&Point; 3], l: &Line, m: &Line) -> Result<RangeProjectivity> {
    // r ~ alpha p + beta q via r x q = alpha (p x q) and p x r = beta (p x q)
    let coeffs = |p: &Vec3, q: &Vec3, r: &Vec3| -> (BigInt, BigInt) {
        let pq = hvec::cross(p, q);
        let k = (0..3).find(|&i| !pq[i].is_zero()).expect("apart points");
        (hvec::cross(r, q)[k].clone(), hvec::cross(p, r)[k].clone())
    };
    let (alpha, beta) = coeffs(src[0].coords(), src[1].coords(), src[2].coords());
    let (gamma, delta) = coeffs(dst[0].coords(), dst[1].coords(), dst[2].coords());
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() || delta.is_zero() {
        return Err(GeomError::NotApart("three-point correspondence"));
    }
    // M p = (gamma beta) p', M q = (delta alpha) q' makes M r ~ r'
    let a = &gamma * &beta;
    let b = &delta * &alpha;
    let scale = &alpha * &beta;
    let target = |i: usize| -> Vec3 {
        match i {
            0 => dst[0].coords().clone().map(|x| x * &a),
            1 => dst[1].coords().clone().map(|x| x * &b),
            _ => m.coords().clone().map(|x| x * &scale),
        }
    };
    let source = Mat3::from_fn(|i, j| match j {
        0 => src[0].coords()[i].clone(),
        1 => src[1].coords()[i].clone(),
        _ => l.coords()[i].clone(),
    });
    let t = [target(0), target(1), target(2)];
    let targets = Mat3::from_fn(|i, j| t[j][i].clone());
    RangeProjectivity::from_matrix(l.clone(), m.clone(), targets.mul(&source.adjugate()))
}

/// The unique projectivity sending `src` to `dst` (each a triple of
/// pairwise-apart collinear points; the two lines may coincide).
///
/// Built from [`fundamental_chain`]; a direct linear solve is the fallback.
pub fn from_three_points(src: [&Point; 3], dst: [&Point; 3]) -> Result<RangeProjectivity> {
    let l = check_triple(src)?;
    let m = check_triple(dst)?;
    let built = fundamental_chain(src, dst)
        .and_then(|chain| compose_chain(&chain))
        .or_else(|_| solve_three_points(src, dst, &l, &m))?;
    for (x, y) in src.iter().zip(dst.iter()) {
        if built.apply(x)? != **y {
            return Err(GeomError::Degenerate("three-point solve failed".into()));
        }
    }
    Ok(built)
}

/// Elements of the two-center construction for `ABC -> A'B'C'`:
/// `R = AA' . BB'`, `S = BB' . CC'`, `n = A'C`, and the composite of the
/// projections from `R` (onto `n`) and from `S` (onto `m`).
#[derive(Clone, Debug)]
pub struct CenterChain {
    pub r: Point,
    pub s: Point,
    pub n: Line,
    pub map: RangeProjectivity,
}

impl CenterChain {
    /// The joins `AA'`, `BB'`, `CC'` are nonconcurrent.
    pub fn centers_apart(&self) -> bool {
        self.r.apart(&self.s)
    }
}

pub fn center_chain(src: [&Point; 3], dst: [&Point; 3]) -> Result<CenterChain> {
    let l = check_triple(src)?;
    let m = check_triple(dst)?;
    let o = meet(&l, &m).map_err(|_| GeomError::SameLine)?;
    if src.iter().chain(dst.iter()).any(|p| !p.apart(&o)) {
        return Err(GeomError::NotApart("points must differ from the common point"));
    }
    let [a, b, c] = src;
    let [a2, b2, c2] = dst;
    let bb = join(b, b2)?;
    let r = meet(&join(a, a2)?, &bb)?;
    let s = meet(&bb, &join(c, c2)?)?;
    let n = join(a2, c)?;
    let first = projection(&r, &l, &n)?;
    let second = projection(&s, &n, &m)?;
    Ok(CenterChain {
        r,
        s,
        n,
        map: compose(&second, &first)?,
    })
}

fn common_point(f: &RangeProjectivity) -> Result<Point> {
    meet(f.domain(), f.codomain()).map_err(|_| GeomError::SameLine)
}

/// The common point of the two ranges is moved.
pub fn is_nonperspective(f: &RangeProjectivity) -> Result<bool> {
    let o = common_point(f)?;
    Ok(f.apply(&o)?.apart(&o))
}

/// `UV` with `V = f(O)`, `U = f^-1(O)`, `O` the common point.
pub fn axis_of_homology(f: &RangeProjectivity) -> Result<Line> {
    if !is_nonperspective(f)? {
        return Err(GeomError::Perspective);
    }
    let o = common_point(f)?;
    let u = f.inverse().apply(&o)?;
    let v = f.apply(&o)?;
    join(&u, &v)
}

/// `AB' . BA'` for apart `A, B` of the domain, both apart from the common point.
pub fn cross_join(f: &RangeProjectivity, a: &Point, b: &Point) -> Result<Point> {
    let o = common_point(f)?;
    if !a.apart(&o) || !b.apart(&o) {
        return Err(GeomError::Degenerate(
            "cross-join needs points apart from the common point".into(),
        ));
    }
    if !a.apart(b) {
        return Err(GeomError::NotApart("cross-join"));
    }
    meet(&join(a, &f.apply(b)?)?, &join(b, &f.apply(a)?)?)
}

/// `B' = A(BA' . h) . m`, the image of `b` recovered from the image of `a`
/// and the axis of homology `h`.
pub fn image_via_axis(f: &RangeProjectivity, a: &Point, b: &Point) -> Result<Point> {
    let o = common_point(f)?;
    let a_img = f.apply(a)?;
    if !a.apart(&o) || !a_img.apart(&o) || !b.apart(&o) {
        return Err(GeomError::Degenerate(
            "axis reconstruction needs A, A', B apart from the common point".into(),
        ));
    }
    if !b.apart(a) || !incident(b, f.domain()) {
        return Err(GeomError::NotApart("axis reconstruction"));
    }
    let h = axis_of_homology(f)?;
    let e = meet(&join(b, &a_img)?, &h)?;
    meet(&join(a, &e)?, f.codomain())
}

/// Harmonic conjugacy with respect to `a, b` as a product of three
/// projections: with `R` off `AB` and `P` on `BR`,
/// `AB -> AR` from `P`, `AR -> AP` from `B`, `AP -> AB` from `R`.
pub fn harmonic_involution(a: &Point, b: &Point) -> Result<RangeProjectivity> {
    let ab = join(a, b).map_err(|_| GeomError::NotApart("involution base points"))?;
    let r = AuxPool::PRIMARY
        .first_outside(&[&ab])
        .ok_or_else(|| GeomError::Degenerate("auxiliary pool exhausted".into()))?;
    let br = join(b, &r)?;
    let p = fresh_point_on(&br, &[b.clone(), r.clone()]);
    let ar = join(a, &r)?;
    let ap = join(a, &p)?;
    compose_chain(&[
        projection(&p, &ab, &ar)?,
        projection(b, &ar, &ap)?,
        projection(&r, &ap, &ab)?,
    ])
}

/// The projectivity of `AB` exchanging `a` and `b` and sending `x` to `y`.
pub fn swap_projectivity(a: &Point, b: &Point, x: &Point, y: &Point) -> Result<RangeProjectivity> {
    from_three_points([a, b, x], [b, a, y])
}

/// A map of a range to itself of order two: self-inverse on three
/// samples and not the identity.
pub fn is_involution(f: &RangeProjectivity) -> bool {
    f.domain() == f.codomain()
        && compose(f, f).is_ok_and(|ff| ff.is_identity())
        && !f.is_identity()
}

/// For an involution fixing `m`, the other fixed point `h(A, A'; M)`
/// where `A` is the first sample moved by `f`.
pub fn second_fixed_point(f: &RangeProjectivity, m: &Point) -> Result<Point> {
    if f.domain() != f.codomain() || !compose(f, f)?.is_identity() {
        return Err(GeomError::NotInvolution);
    }
    if f.apply(m)? != *m {
        return Err(GeomError::NotFixed);
    }
    let a = f
        .samples()
        .into_iter()
        .find(|x| f.apply(x).is_ok_and(|y| y.apart(x)))
        .ok_or(GeomError::NoMovedPoint)?;
    harmonic_conjugate(&a, &f.apply(&a)?, m)
}

/// A projectivity between pencils `U*` and `V*`, carried as a range
/// projectivity of the dual plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilProjectivity(RangeProjectivity);

impl PencilProjectivity {
    pub fn from_range(f: RangeProjectivity) -> Self {
        PencilProjectivity(f)
    }

    /// Sends three apart lines through one point to three apart lines
    /// through another.
    pub fn from_three_lines(src: [&Line; 3], dst: [&Line; 3]) -> Result<Self> {
        let s = src.map(Line::dual);
        let d = dst.map(Line::dual);
        from_three_points([&s[0], &s[1], &s[2]], [&d[0], &d[1], &d[2]]).map(PencilProjectivity)
    }

    pub fn as_range(&self) -> &RangeProjectivity {
        &self.0
    }

    /// Center of the source pencil.
    pub fn source(&self) -> Point {
        self.0.domain().dual()
    }

    /// Center of the target pencil.
    pub fn target(&self) -> Point {
        self.0.codomain().dual()
    }

    pub fn apply(&self, l: &Line) -> Result<Line> {
        self.0.apply(&l.dual()).map(|p| p.dual())
    }

    pub fn inverse(&self) -> PencilProjectivity {
        PencilProjectivity(self.0.inverse())
    }

    /// Dual of the axis of homology: the point carrying every cross-meet.
    pub fn center_of_homology(&self) -> Result<Point> {
        axis_of_homology(&self.0).map(|l| l.dual())
    }

    pub fn is_nonperspective(&self) -> Result<bool> {
        is_nonperspective(&self.0)
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
    fn projection_example() {
        let (t, l, m) = (pt(1, 1, 1), ln(0, 0, 1), ln(1, 0, 0));
        let f = projection(&t, &l, &m).unwrap();
        assert_eq!(f.apply(&pt(1, 0, 0)).unwrap(), pt(0, 1, 1));
        let x = pt(0, 1, 0);
        let oracle = meet(&join(&t, &x).unwrap(), &m).unwrap();
        assert_eq!(f.apply(&x).unwrap(), oracle);
        // common point fixed
        let o = meet(&l, &m).unwrap();
        assert_eq!(f.apply(&o).unwrap(), o);
    }

    #[test]
    fn projection_center_must_be_outside() {
        let e = projection(&pt(1, 0, 0), &ln(0, 0, 1), &ln(1, 0, 0));
        assert_eq!(e.unwrap_err(), GeomError::CenterOnLine("domain"));
        let e = projection(&pt(0, 1, 0), &ln(0, 1, 1), &ln(1, 0, 0));
        assert_eq!(e.unwrap_err(), GeomError::CenterOnLine("codomain"));
    }

    #[test]
    fn back_projection_is_identity() {
        let (t, l, m) = (pt(1, 1, 1), ln(0, 0, 1), ln(1, 0, 0));
        let there = projection(&t, &l, &m).unwrap();
        let back = projection(&t, &m, &l).unwrap();
        assert!(compose(&back, &there).unwrap().is_identity());
        assert!(compose(&there.inverse(), &there).unwrap().is_identity());
    }

    #[test]
    fn apply_off_domain_rejected() {
        let f = RangeProjectivity::identity(&ln(0, 0, 1));
        assert_eq!(f.apply(&pt(0, 0, 1)), Err(GeomError::OffDomain));
        assert_eq!(f.apply(&pt(3, 4, 0)).unwrap(), pt(3, 4, 0));
    }

    #[test]
    fn chain_mismatch() {
        let f = RangeProjectivity::identity(&ln(0, 0, 1));
        let g = RangeProjectivity::identity(&ln(1, 0, 0));
        assert_eq!(compose(&g, &f).unwrap_err(), GeomError::ChainMismatch);
    }

    #[test]
    fn three_points_identity() {
        let (p, q, r) = (pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0));
        let f = from_three_points([&p, &q, &r], [&p, &q, &r]).unwrap();
        assert!(f.is_identity());
    }

    #[test]
    fn fundamental_chain_has_six_projections() {
        let (p, q, r) = (pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0));
        let (p2, q2, r2) = (pt(0, 1, 1), pt(0, 1, -1), pt(0, 1, 3));
        let chain = fundamental_chain([&p, &q, &r], [&p2, &q2, &r2]).unwrap();
        assert_eq!(chain.len(), 6);
        let f = compose_chain(&chain).unwrap();
        assert_eq!(f.apply(&p).unwrap(), p2);
        assert_eq!(f.apply(&q).unwrap(), q2);
        assert_eq!(f.apply(&r).unwrap(), r2);
    }

    #[test]
    fn direct_solve_agrees_with_chain() {
        let (p, q, r) = (pt(1, 0, 0), pt(0, 1, 0), pt(2, 3, 0));
        let (p2, q2, r2) = (pt(1, 1, 1), pt(1, -1, 0), pt(3, 1, 2));
        let l = join(&p, &q).unwrap();
        let m = join(&p2, &q2).unwrap();
        let solved = solve_three_points([&p, &q, &r], [&p2, &q2, &r2], &l, &m).unwrap();
        let chained = from_three_points([&p, &q, &r], [&p2, &q2, &r2]).unwrap();
        assert!(solved.equal(&chained));
    }

    #[test]
    fn perspective_projection_has_no_axis() {
        let f = projection(&pt(1, 1, 1), &ln(0, 0, 1), &ln(1, 0, 0)).unwrap();
        assert!(!is_nonperspective(&f).unwrap());
        assert_eq!(axis_of_homology(&f), Err(GeomError::Perspective));
        let id = RangeProjectivity::identity(&ln(0, 0, 1));
        assert_eq!(is_nonperspective(&id), Err(GeomError::SameLine));
    }

    #[test]
    fn harmonic_involution_basics() {
        let (a, b) = (pt(1, 0, 0), pt(0, 1, 0));
        let v = harmonic_involution(&a, &b).unwrap();
        assert_eq!(v.apply(&a).unwrap(), a);
        assert_eq!(v.apply(&b).unwrap(), b);
        assert_eq!(v.apply(&pt(1, 1, 0)).unwrap(), pt(1, -1, 0));
        assert!(is_involution(&v));
        assert_eq!(second_fixed_point(&v, &a).unwrap(), b);
    }

    #[test]
    fn identity_has_no_moved_point() {
        let id = RangeProjectivity::identity(&ln(0, 0, 1));
        assert!(!is_involution(&id));
        assert_eq!(second_fixed_point(&id, &pt(1, 0, 0)), Err(GeomError::NoMovedPoint));
    }

    #[test]
    fn pencil_map_by_duality() {
        // lines through <0,0,1> to lines through <1,0,0>
        let src = [ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 0)];
        let dst = [ln(0, 1, 0), ln(0, 0, 1), ln(0, 1, 1)];
        let f = PencilProjectivity::from_three_lines(
            [&src[0], &src[1], &src[2]],
            [&dst[0], &dst[1], &dst[2]],
        )
        .unwrap();
        assert_eq!(f.source(), pt(0, 0, 1));
        assert_eq!(f.target(), pt(1, 0, 0));
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(&f.apply(s).unwrap(), d);
        }
    }
}
