//! Seeded generators of configurations for property and acceptance tests.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::{conic_through_five, Conic};
use crate::plane::{join, line_basis, outside, Line, Point};
use crate::scalar::Scalar;

#[derive(Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    /// Coordinates drawn from `-bound..=bound`.
    pub fn new(seed: u64, bound: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    pub fn int(&mut self) -> i64 {
        self.rng.random_range(-self.bound..=self.bound)
    }

    pub fn nonzero_int(&mut self) -> i64 {
        loop {
            let n = self.int();
            if n != 0 {
                return n;
            }
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let den = self.rng.random_range(1..=self.bound.max(1));
        Scalar::new(self.int(), den).expect("nonzero denominator")
    }

    pub fn point(&mut self) -> Point {
        loop {
            if let Ok(p) = Point::new(self.int(), self.int(), self.int()) {
                return p;
            }
        }
    }

    pub fn line(&mut self) -> Line {
        self.point().dual()
    }

    /// A point apart from each of `avoid`.
    pub fn point_apart(&mut self, avoid: &[&Point]) -> Point {
        loop {
            let p = self.point();
            if avoid.iter().all(|a| a.apart(&p)) {
                return p;
            }
        }
    }

    pub fn point_off(&mut self, lines: &[&Line]) -> Point {
        loop {
            let p = self.point();
            if lines.iter().all(|l| outside(&p, l)) {
                return p;
            }
        }
    }

    /// A point of `l` apart from each of `avoid`.
    pub fn point_on(&mut self, l: &Line, avoid: &[&Point]) -> Point {
        let (q, r) = line_basis(l);
        loop {
            let (s, t) = (BigInt::from(self.int()), BigInt::from(self.int()));
            let v = [0, 1, 2].map(|i| &s * &q.coords()[i] + &t * &r.coords()[i]);
            if let Ok(p) = Point::from_ints(v) {
                if avoid.iter().all(|a| a.apart(&p)) {
                    return p;
                }
            }
        }
    }

    /// `n` pairwise-apart points of `l` apart from `avoid`.
    pub fn points_on(&mut self, l: &Line, avoid: &[&Point], n: usize) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::with_capacity(n);
        while out.len() < n {
            let mut all: Vec<&Point> = avoid.to_vec();
            all.extend(out.iter());
            let p = self.point_on(l, &all);
            out.push(p);
        }
        out
    }

    /// A line through `p` apart from each of `avoid`.
    pub fn line_through(&mut self, p: &Point, avoid: &[&Line]) -> Line {
        loop {
            let q = self.point_apart(&[p]);
            let l = join(p, &q).expect("apart");
            if avoid.iter().all(|m| m.apart(&l)) {
                return l;
            }
        }
    }

    /// Four points with no three collinear.
    pub fn quadrangle(&mut self) -> [Point; 4] {
        loop {
            let v = [self.point(), self.point(), self.point(), self.point()];
            if crate::harmonic::Quadrangle::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).is_ok() {
                return v;
            }
        }
    }

    /// Five points in general position.
    pub fn five_points(&mut self) -> [Point; 5] {
        loop {
            let v = [self.point(), self.point(), self.point(), self.point(), self.point()];
            if conic_through_five(&v[0], &v[1], &v[2], &v[3], &v[4]).is_ok() {
                return v;
            }
        }
    }

    pub fn conic(&mut self) -> Conic {
        let v = self.five_points();
        conic_through_five(&v[0], &v[1], &v[2], &v[3], &v[4]).expect("general position")
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.random_range(0..items.len())]
    }
}
