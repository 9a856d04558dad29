//! Quadrangles and the harmonic conjugate construction.
//!
//! The conjugate `h(A, B; C)` is built for every point `C` of the line `AB`,
//! the base points included: pick a line `l` through `C` other than `AB` and
//! a point `R` off both lines, then
//!
//! ```text
//! P = BR . l    Q = AR . l    S = AP . BQ    D = AB . RS
//! ```
//!
//! The auxiliaries come from a fixed [`AuxPool`] so results are reproducible;
//! the conjugate itself does not depend on which auxiliaries are used.

use crate::error::{GeomError, Result};
use crate::plane::{incident, join, meet, outside, AuxPool, Line, Point};

/// Four pairwise-apart points with no three collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrangle {
    pub p: Point,
    pub q: Point,
    pub r: Point,
    pub s: Point,
}

impl Quadrangle {
    pub fn new(p: Point, q: Point, r: Point, s: Point) -> Result<Self> {
        let v = [&p, &q, &r, &s];
        for i in 0..4 {
            for j in i + 1..4 {
                if !v[i].apart(v[j]) {
                    return Err(GeomError::NotApart("quadrangle vertices"));
                }
            }
        }
        for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            if !outside(v[k], &join(v[i], v[j])?) {
                return Err(GeomError::Degenerate(format!(
                    "quadrangle vertices {}, {}, {} are collinear",
                    "PQRS".as_bytes()[i] as char,
                    "PQRS".as_bytes()[j] as char,
                    "PQRS".as_bytes()[k] as char
                )));
            }
        }
        Ok(Quadrangle { p, q, r, s })
    }

    /// `(PQ.RS, PR.QS, PS.QR)`
    pub fn diagonal_points(&self) -> Result<(Point, Point, Point)> {
        let (p, q, r, s) = (&self.p, &self.q, &self.r, &self.s);
        let d1 = meet(&join(p, q)?, &join(r, s)?)?;
        let d2 = meet(&join(p, r)?, &join(q, s)?)?;
        let d3 = meet(&join(p, s)?, &join(q, r)?)?;
        Ok((d1, d2, d3))
    }

    /// The third diagonal point lies outside the join of the other two.
    pub fn fano_check(&self) -> Result<bool> {
        let (d1, d2, d3) = self.diagonal_points()?;
        Ok(outside(&d3, &join(&d1, &d2)?))
    }
}

/// Every element of one run of the harmonic construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicWitness {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub l: Line,
    pub r: Point,
    pub p: Point,
    pub q: Point,
    pub s: Point,
    pub d: Point,
}

fn base_line(a: &Point, b: &Point, c: &Point) -> Result<Line> {
    let ab = join(a, b).map_err(|_| GeomError::NotApart("harmonic base points"))?;
    if !incident(c, &ab) {
        return Err(GeomError::Degenerate(
            "point does not lie on the join of the base points".into(),
        ));
    }
    Ok(ab)
}

/// Auxiliary line through `c` and auxiliary point, taken from the primary pool.
pub fn select_auxiliary(a: &Point, b: &Point, c: &Point) -> Result<(Line, Point)> {
    select_auxiliary_in(a, b, c, AuxPool::PRIMARY)
}

/// `l = C S0` for the first pool point `S0` off `AB`; `R` is the first pool
/// point off both `AB` and `l`.
pub fn select_auxiliary_in(a: &Point, b: &Point, c: &Point, pool: AuxPool) -> Result<(Line, Point)> {
    let ab = base_line(a, b, c)?;
    let s0 = pool
        .first_outside(&[&ab])
        .ok_or_else(|| GeomError::Degenerate("auxiliary pool exhausted".into()))?;
    let l = join(c, &s0)?;
    let r = pool
        .first_outside(&[&ab, &l])
        .ok_or_else(|| GeomError::Degenerate("auxiliary pool exhausted".into()))?;
    Ok((l, r))
}

/// Runs the construction with explicitly chosen auxiliaries.
pub fn harmonic_witness_with(a: &Point, b: &Point, c: &Point, l: &Line, r: &Point) -> Result<HarmonicWitness> {
    let ab = base_line(a, b, c)?;
    if !incident(c, l) || !l.apart(&ab) {
        return Err(GeomError::Degenerate(
            "auxiliary line must pass through C and differ from AB".into(),
        ));
    }
    if !outside(r, &ab) || !outside(r, l) {
        return Err(GeomError::Degenerate(
            "auxiliary point must lie outside AB and l".into(),
        ));
    }
    let p = meet(&join(b, r)?, l)?;
    let q = meet(&join(a, r)?, l)?;
    let s = meet(&join(a, &p)?, &join(b, &q)?)?;
    let d = meet(&ab, &join(r, &s)?)?;
    Ok(HarmonicWitness {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        l: l.clone(),
        r: r.clone(),
        p,
        q,
        s,
        d,
    })
}

pub fn harmonic_witness(a: &Point, b: &Point, c: &Point, pool: AuxPool) -> Result<HarmonicWitness> {
    let (l, r) = select_auxiliary_in(a, b, c, pool)?;
    harmonic_witness_with(a, b, c, &l, &r)
}

/// `h(A, B; C)`.
pub fn harmonic_conjugate(a: &Point, b: &Point, c: &Point) -> Result<Point> {
    harmonic_witness(a, b, c, AuxPool::PRIMARY).map(|w| w.d)
}

/// Harmonic conjugate of a line in a pencil, by duality.
pub fn harmonic_conjugate_line(a: &Line, b: &Line, c: &Line) -> Result<Line> {
    harmonic_conjugate(&a.dual(), &b.dual(), &c.dual()).map(|p| p.dual())
}

/// `h(A, B; C, D)`: `D` is the harmonic conjugate of `C`.
pub fn is_harmonic_set(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<bool> {
    let ab = base_line(a, b, c)?;
    if !incident(d, &ab) {
        return Err(GeomError::Degenerate(
            "point does not lie on the join of the base points".into(),
        ));
    }
    Ok(harmonic_conjugate(a, b, c)? == *d)
}
