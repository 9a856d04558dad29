#![allow(dead_code)]

use pg_core::plane::{Line, Point};
use pg_core::random::Sampler;
use proptest::prelude::*;

pub fn pt(x: i64, y: i64, z: i64) -> Point {
    Point::new(x, y, z).unwrap()
}

pub fn ln(x: i64, y: i64, z: i64) -> Line {
    Line::new(x, y, z).unwrap()
}

pub fn point() -> impl Strategy<Value = Point> {
    (-9i64..=9, -9i64..=9, -9i64..=9)
        .prop_filter("nonzero", |(x, y, z)| (*x, *y, *z) != (0, 0, 0))
        .prop_map(|(x, y, z)| pt(x, y, z))
}

pub fn line() -> impl Strategy<Value = Line> {
    point().prop_map(|p| p.dual())
}

/// Seeded generator for configurations with side conditions.
pub fn sampler() -> impl Strategy<Value = Sampler> {
    any::<u64>().prop_map(|seed| Sampler::new(seed, 7))
}

pub fn apart_all(v: &[&Point]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i].apart(v[j])))
}
