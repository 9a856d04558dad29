//! Steiner conics and their apparatus: membership, base change, tangents,
//! secants, Pascal lines, the dual line-conic, poles and polars.
//!
//! A conic is the locus `{ l . pi(l) : l through U }` of a nonperspective
//! pencil projectivity `pi : U* -> V*`. Everything below stays in exact
//! rationals: a line meets the conic only where a construction anchors it
//! at a known member, and the second member comes from a rational formula.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::harmonic::harmonic_conjugate;
use crate::plane::{
    cotransitive_pick, fresh_line_through, incident, join, meet, outside, Cotransitive, Line, Point,
};
use crate::projectivity::{PencilProjectivity, RangeProjectivity};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Conic {
    u: Point,
    v: Point,
    pencil: PencilProjectivity,
    points: [Point; 5],
}

/// A line through `p` meeting the conic in the two members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Secant {
    pub line: Line,
    pub members: (Point, Point),
}

fn check_five(pts: [&Point; 5]) -> Result<()> {
    const NAMES: [&str; 5] = ["U", "V", "A", "B", "C"];
    for i in 0..5 {
        for j in i + 1..5 {
            if !pts[i].apart(pts[j]) {
                return Err(GeomError::DegenerateFive(format!(
                    "{}, {} (coincident)",
                    NAMES[i], NAMES[j]
                )));
            }
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let l = join(pts[i], pts[j])?;
            for k in j + 1..5 {
                if incident(pts[k], &l) {
                    return Err(GeomError::DegenerateFive(format!(
                        "{}, {}, {}",
                        NAMES[i], NAMES[j], NAMES[k]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The conic with base points `u, v` through `a, b, c`: its pencil map
/// sends `UA, UB, UC` to `VA, VB, VC`.
pub fn conic_through_five(u: &Point, v: &Point, a: &Point, b: &Point, c: &Point) -> Result<Conic> {
    check_five([u, v, a, b, c])?;
    let src = [join(u, a)?, join(u, b)?, join(u, c)?];
    let dst = [join(v, a)?, join(v, b)?, join(v, c)?];
    let pencil = PencilProjectivity::from_three_lines(
        [&src[0], &src[1], &src[2]],
        [&dst[0], &dst[1], &dst[2]],
    )?;
    if !pencil.is_nonperspective()? {
        return Err(GeomError::DegenerateFive("U, V and the joins are perspective".into()));
    }
    Ok(Conic {
        u: u.clone(),
        v: v.clone(),
        pencil,
        points: [u.clone(), v.clone(), a.clone(), b.clone(), c.clone()],
    })
}

impl Conic {
    /// Conic of a nonperspective pencil map between apart centers.
    pub fn from_pencil(pencil: PencilProjectivity) -> Result<Conic> {
        let u = pencil.source();
        let v = pencil.target();
        if !u.apart(&v) {
            return Err(GeomError::NotApart("conic base points"));
        }
        if !pencil.is_nonperspective()? {
            return Err(GeomError::Perspective);
        }
        let mut k = Conic {
            points: [u.clone(), v.clone(), u.clone(), u.clone(), u.clone()],
            u,
            v,
            pencil,
        };
        let t = k.trace(3);
        k.points[2..].clone_from_slice(&t);
        Ok(k)
    }

    pub fn base_points(&self) -> (&Point, &Point) {
        (&self.u, &self.v)
    }

    pub fn pencil(&self) -> &PencilProjectivity {
        &self.pencil
    }

    /// `U, V` followed by three further members.
    pub fn defining_points(&self) -> &[Point; 5] {
        &self.points
    }

    /// The member `l . pi(l)` cut out by a line `l` through `U`.
    pub fn member_on(&self, l: &Line) -> Result<Point> {
        meet(l, &self.pencil.apply(l)?)
    }

    pub fn contains(&self, x: &Point) -> bool {
        if !x.apart(&self.u) {
            return true;
        }
        let ux = join(&self.u, x).expect("apart");
        self.pencil.apply(&ux).is_ok_and(|img| incident(x, &img))
    }

    fn tangent_at_u(&self) -> Result<Line> {
        self.pencil.inverse().apply(&join(&self.v, &self.u)?)
    }

    fn tangent_at_v(&self) -> Result<Line> {
        self.pencil.apply(&join(&self.u, &self.v)?)
    }

    /// `n` pairwise-apart members other than `U` and `V`, from the scan of
    /// pencil lines through `U` skipping `UV` and the tangent at `U`.
    pub fn trace(&self, n: usize) -> Vec<Point> {
        let mut skip = vec![
            join(&self.u, &self.v).expect("base points apart"),
            self.tangent_at_u().expect("pencil map defined on U*"),
        ];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let l = fresh_line_through(&self.u, &skip);
            out.push(self.member_on(&l).expect("l differs from UV"));
            skip.push(l);
        }
        out
    }

    /// Members cut by the pencil lines `(1 - s^2) a + 2 s b` through `U`,
    /// one per parameter, where `a, b` is the canonical basis of `U*`.
    /// The result may include `U` and `V`.
    pub fn sweep(&self, params: &[Scalar]) -> Result<Vec<Point>> {
        let (a, b) = crate::plane::line_basis(&self.u.dual());
        let (a, b) = (a.dual(), b.dual());
        params
            .iter()
            .map(|s| {
                let one = Scalar::one();
                let two = Scalar::from(2);
                let ca = &one - &(s * s);
                let cb = &two * s;
                let coords = [0, 1, 2].map(|i| {
                    &(&ca * &Scalar::from(a.coords()[i].clone()))
                        + &(&cb * &Scalar::from(b.coords()[i].clone()))
                });
                let l = Line::from_hvec(crate::hvec::HVec::from_scalars(&coords)?);
                self.member_on(&l)
            })
            .collect()
    }

    /// First `n` traced members apart from every point of `avoid`.
    fn members_avoiding(&self, avoid: &[&Point], n: usize) -> Vec<Point> {
        self.trace(n + avoid.len())
            .into_iter()
            .filter(|p| avoid.iter().all(|a| a.apart(p)))
            .take(n)
            .collect()
    }

    /// The same point set seen from new base points `u1, v1`, refitted
    /// through three further members.
    pub fn change_base(&self, u1: &Point, v1: &Point) -> Result<Conic> {
        if !self.contains(u1) || !self.contains(v1) {
            return Err(GeomError::NotOnConic);
        }
        if !u1.apart(v1) {
            return Err(GeomError::NotApart("conic base points"));
        }
        if *u1 == self.u && *v1 == self.v {
            return Ok(self.clone());
        }
        if *u1 == self.v && *v1 == self.u {
            return Ok(self.swapped());
        }
        let t = self.members_avoiding(&[u1, v1], 3);
        conic_through_five(u1, v1, &t[0], &t[1], &t[2])
    }

    /// Base points exchanged; the inverse pencil map gives the same locus.
    fn swapped(&self) -> Conic {
        let mut points = self.points.clone();
        points.swap(0, 1);
        Conic {
            u: self.v.clone(),
            v: self.u.clone(),
            pencil: self.pencil.inverse(),
            points,
        }
    }

    /// A representation with `p` as second base point.
    fn based_at(&self, p: &Point) -> Result<Conic> {
        if *p == self.v {
            return Ok(self.clone());
        }
        if *p == self.u {
            return Ok(self.swapped());
        }
        let q = self.members_avoiding(&[p], 1).remove(0);
        self.change_base(&q, p)
    }

    /// Tangent at `p`: the image of `QP` under the pencil map of the
    /// representation based at `(Q, P)`.
    pub fn tangent_at(&self, p: &Point) -> Result<Line> {
        if !self.contains(p) {
            return Err(GeomError::NotOnConic);
        }
        if *p == self.u {
            return self.tangent_at_u();
        }
        if *p == self.v {
            return self.tangent_at_v();
        }
        self.based_at(p)?.tangent_at_v()
    }

    /// Tangent at `p` computed through an explicitly chosen member `q`.
    pub fn tangent_at_via(&self, p: &Point, q: &Point) -> Result<Line> {
        if !self.contains(p) || !self.contains(q) {
            return Err(GeomError::NotOnConic);
        }
        self.change_base(q, p)?.tangent_at_v()
    }

    /// The other member on a line `l` through the member `p`:
    /// `l . pi^-1(l)` in the representation based at `(Q, P)`.
    pub fn second_intersection(&self, p: &Point, l: &Line) -> Result<Point> {
        if !self.contains(p) {
            return Err(GeomError::NotOnConic);
        }
        if !incident(p, l) {
            return Err(GeomError::Degenerate("line does not pass through the point".into()));
        }
        let k = self.based_at(p)?;
        if *l == k.tangent_at_v()? {
            return Err(GeomError::TangentLine);
        }
        meet(l, &k.pencil.inverse().apply(l)?)
    }

    /// The three meets of opposite sides `(AB, DE)`, `(BC, EF)`, `(CD, FA)`.
    pub fn pascal_points(&self, hexagon: [&Point; 6]) -> Result<[Point; 3]> {
        if hexagon.iter().any(|p| !self.contains(p)) {
            return Err(GeomError::NotOnConic);
        }
        for i in 0..6 {
            for j in i + 1..6 {
                if !hexagon[i].apart(hexagon[j]) {
                    return Err(GeomError::NotApart("hexagon vertices"));
                }
            }
        }
        let side = |i: usize| join(hexagon[i % 6], hexagon[(i + 1) % 6]);
        Ok([
            meet(&side(0)?, &side(3)?)?,
            meet(&side(1)?, &side(4)?)?,
            meet(&side(2)?, &side(5)?)?,
        ])
    }

    /// The Pascal line of an inscribed hexagon given in cyclic order.
    pub fn pascal_line(&self, hexagon: [&Point; 6]) -> Result<Line> {
        let [x, y, z] = self.pascal_points(hexagon)?;
        if !x.apart(&y) || !y.apart(&z) || !x.apart(&z) {
            return Err(GeomError::NotApart("Pascal points"));
        }
        let line = join(&x, &y)?;
        if !incident(&z, &line) {
            return Err(GeomError::Degenerate("Pascal points are not collinear".into()));
        }
        Ok(line)
    }

    /// Secant through `p` from three members and their tangents: branch on
    /// which tangent meet `p` is apart from, then on which tangent `p`
    /// avoids, and join `p` to that member.
    fn secant_from(&self, p: &Point, members: [&Point; 3]) -> Result<Secant> {
        let tangents = members
            .iter()
            .map(|m| self.tangent_at(m))
            .collect::<Result<Vec<_>>>()?;
        let concurrent = |_| GeomError::TangentsConcurrent;
        let e = meet(&tangents[0], &tangents[1]).map_err(concurrent)?;
        let f = meet(&tangents[1], &tangents[2]).map_err(concurrent)?;
        let pair = match cotransitive_pick(&e, &f, p).map_err(concurrent)? {
            Cotransitive::FirstApart => [0, 1],
            Cotransitive::SecondApart => [1, 2],
        };
        let pick = pair
            .into_iter()
            .find(|&i| outside(p, &tangents[i]))
            .ok_or_else(|| GeomError::Degenerate("point lies on two tangents at their meet".into()))?;
        let anchor = members[pick];
        let line = join(p, anchor)?;
        let other = self.second_intersection(anchor, &line)?;
        Ok(Secant {
            line,
            members: (anchor.clone(), other),
        })
    }

    /// Two apart secants through any point of the plane.
    pub fn secants_through(&self, p: &Point) -> Result<(Secant, Secant)> {
        let c = self.members_avoiding(&[], 1).remove(0);
        let first = self.secant_from(p, [&self.u, &self.v, &c])?;
        let (x, r) = (&first.members.0, &first.members.1);
        let more = self.members_avoiding(&[x, r], 3);
        let second = self.secant_from(p, [&more[0], &more[1], &more[2]])?;
        if !first.line.apart(&second.line) {
            return Err(GeomError::Degenerate("secants coincide".into()));
        }
        Ok((first, second))
    }

    /// Polar of `p` along a given secant through it: join of the tangent
    /// meet `Q` and the harmonic conjugate of `p` on the secant.
    pub fn polar_via(&self, p: &Point, secant: &Secant) -> Result<Line> {
        if !incident(p, &secant.line) {
            return Err(GeomError::Degenerate("secant does not pass through the point".into()));
        }
        let (q1, q2) = (&secant.members.0, &secant.members.1);
        let q = meet(&self.tangent_at(q1)?, &self.tangent_at(q2)?)?;
        let q_conj = harmonic_conjugate(q1, q2, p)?;
        join(&q, &q_conj)
    }

    pub fn polar(&self, p: &Point) -> Result<Line> {
        let (secant, _) = self.secants_through(p)?;
        self.polar_via(p, &secant)
    }

    /// Pole of `l`: the polar construction carried out on the dual
    /// line-conic, read back in the primal plane.
    pub fn pole(&self, l: &Line) -> Result<Point> {
        let dual = self.dual_conic()?.as_point_conic()?;
        dual.polar(&l.dual()).map(|x| x.dual())
    }

    /// The line-conic of tangents: with members `A = U`, `B = V`, a third
    /// member `C` and tangents `a, b, c`, take `E = a.b`, `F = b.c`,
    /// `G = a.c` and the range map `a -> b` sending `A E G` to `E B F`.
    pub fn dual_conic(&self) -> Result<DualConic> {
        let c = self.members_avoiding(&[], 1).remove(0);
        let ta = self.tangent_at(&self.u)?;
        let tb = self.tangent_at(&self.v)?;
        let tc = self.tangent_at(&c)?;
        let concurrent = |_| GeomError::TangentsConcurrent;
        let e = meet(&ta, &tb).map_err(concurrent)?;
        let f = meet(&tb, &tc).map_err(concurrent)?;
        let g = meet(&ta, &tc).map_err(concurrent)?;
        let distinct = |x: &Point, y: &Point, z: &Point| x.apart(y) && y.apart(z) && x.apart(z);
        if !distinct(&self.u, &e, &g) || !distinct(&e, &self.v, &f) {
            return Err(GeomError::TangentsConcurrent);
        }
        let phi = crate::projectivity::from_three_points([&self.u, &e, &g], [&e, &self.v, &f])?;
        Ok(DualConic { a: ta, b: tb, phi })
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.points;
        write!(f, "conic({}, {}, {}, {}, {})", p[0], p[1], p[2], p[3], p[4])
    }
}

/// A line-conic `{ Q phi(Q) : Q on a }` for a nonperspective range map
/// `phi : a -> b`.
#[derive(Clone, Debug)]
pub struct DualConic {
    pub a: Line,
    pub b: Line,
    pub phi: RangeProjectivity,
}

impl DualConic {
    /// The same object as a point-conic of the dual plane.
    pub fn as_point_conic(&self) -> Result<Conic> {
        Conic::from_pencil(PencilProjectivity::from_range(self.phi.clone()))
    }

    /// `l` belongs to the family.
    pub fn contains_line(&self, l: &Line) -> Result<bool> {
        Ok(self.as_point_conic()?.contains(&l.dual()))
    }

    /// The point of contact of a line of the family.
    pub fn contact_point(&self, l: &Line) -> Result<Point> {
        self.as_point_conic()?.tangent_at(&l.dual()).map(|t| t.dual())
    }
}

/// `F = l . A(CD . (AB . DE)(BC . l))`: the sixth member on a line `l`
/// through the member `e`, from five members.
pub fn sixth_point(a: &Point, b: &Point, c: &Point, d: &Point, e: &Point, l: &Line) -> Result<Point> {
    let five = [a, b, c, d, e];
    for i in 0..5 {
        for j in i + 1..5 {
            if !five[i].apart(five[j]) {
                return Err(GeomError::NotApart("five conic points"));
            }
        }
    }
    if !incident(e, l) {
        return Err(GeomError::Degenerate("line does not pass through E".into()));
    }
    if five[..4].iter().any(|p| incident(p, l)) {
        return Err(GeomError::Degenerate("line passes through one of A, B, C, D".into()));
    }
    fn sub(what: &'static str) -> impl Fn(GeomError) -> GeomError {
        move |_| GeomError::Degenerate(format!("subterm {what} undefined"))
    }
    let x = meet(&join(a, b)?, &join(d, e)?).map_err(sub("AB . DE"))?;
    let y = meet(&join(b, c)?, l).map_err(sub("BC . l"))?;
    let xy = join(&x, &y).map_err(sub("(AB . DE)(BC . l)"))?;
    let z = meet(&join(c, d)?, &xy).map_err(sub("CD . (AB . DE)(BC . l)"))?;
    let az = join(a, &z).map_err(sub("A(CD . (AB . DE)(BC . l))"))?;
    meet(l, &az).map_err(sub("l . A(...)"))
}
