mod common;

use common::{pt, sampler};
use pg_core::conic::{conic_through_five, sixth_point};
use pg_core::oracle::{collinear, quadratic_form_fit, QuadraticForm};
use pg_core::plane::{incident, join, meet};
use pg_core::random::Sampler;
use pg_core::{Conic, GeomError, Point};
use proptest::prelude::*;

fn setup(s: &mut Sampler) -> (Conic, QuadraticForm) {
    let v = s.five_points();
    let k = conic_through_five(&v[0], &v[1], &v[2], &v[3], &v[4]).unwrap();
    let q = quadratic_form_fit([&v[0], &v[1], &v[2], &v[3], &v[4]]).unwrap();
    (k, q)
}

#[test]
fn five_point_rejections() {
    let (u, v, a) = (pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0));
    let (b, c) = (pt(0, 0, 1), pt(1, 1, 1));
    assert!(matches!(conic_through_five(&u, &v, &a, &b, &c), Err(GeomError::DegenerateFive(_))));
    assert!(matches!(conic_through_five(&u, &u, &b, &c, &pt(1, 2, 3)), Err(GeomError::DegenerateFive(_))));
}

#[test]
fn unit_circle() {
    let k = conic_through_five(&pt(1, 0, 1), &pt(-1, 0, 1), &pt(0, 1, 1), &pt(0, -1, 1), &pt(3, 4, 5)).unwrap();
    assert!(k.contains(&pt(5, 12, 13)));
    assert!(!k.contains(&pt(0, 0, 1)));
    assert_eq!(k.tangent_at(&pt(1, 0, 1)).unwrap(), pg_core::Line::new(1, 0, -1).unwrap());
    assert_eq!(k.polar(&pt(0, 0, 1)).unwrap(), pg_core::Line::new(0, 0, 1).unwrap());
    assert_eq!(k.pole(&pg_core::Line::new(1, 0, -2).unwrap()).unwrap(), pt(1, 0, 2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn membership_matches_the_form(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        for x in k.trace(8) {
            prop_assert!(q.contains(&x));
            prop_assert!(k.contains(&x));
        }
        for _ in 0..8 {
            let x = s.point();
            prop_assert_eq!(k.contains(&x), q.contains(&x));
        }
    }

    #[test]
    fn order_of_the_five_points_is_irrelevant(mut s in sampler(), rot in 1usize..5, swap in any::<bool>()) {
        let v = s.five_points();
        let k = conic_through_five(&v[0], &v[1], &v[2], &v[3], &v[4]).unwrap();
        let mut w = v.clone();
        w.rotate_left(rot);
        if swap {
            w.swap(0, 1);
        }
        let k2 = conic_through_five(&w[0], &w[1], &w[2], &w[3], &w[4]).unwrap();
        for x in k.trace(5) {
            prop_assert!(k2.contains(&x));
        }
        for x in k2.trace(5) {
            prop_assert!(k.contains(&x));
        }
    }

    #[test]
    fn change_base_round_trip(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let (u, v) = (k.base_points().0.clone(), k.base_points().1.clone());
        let m = k.trace(2);
        let k1 = k.change_base(&m[0], &m[1]).unwrap();
        prop_assert_eq!(k1.base_points(), (&m[0], &m[1]));
        for x in k1.trace(5) {
            prop_assert!(q.contains(&x));
        }
        let back = k1.change_base(&u, &v).unwrap();
        for x in back.trace(5) {
            prop_assert!(k.contains(&x));
        }
        let swapped = k.change_base(&v, &u).unwrap();
        for x in k.trace(4) {
            prop_assert!(swapped.contains(&x));
        }
        let off = s.point();
        prop_assume!(!q.contains(&off));
        prop_assert_eq!(k.change_base(&u, &off).unwrap_err(), GeomError::NotOnConic);
        prop_assert_eq!(k.change_base(&u, &u).unwrap_err(), GeomError::NotApart("conic base points"));
    }

    #[test]
    fn tangents_match_the_oracle(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let (u, v) = (k.base_points().0.clone(), k.base_points().1.clone());
        for x in k.trace(4).iter().chain([&u, &v]) {
            let t = k.tangent_at(x).unwrap();
            prop_assert_eq!(&t, &q.polar(x).unwrap());
            let other = k.trace(6).into_iter().find(|y| y.apart(x)).unwrap();
            prop_assert_eq!(&k.tangent_at_via(x, &other).unwrap(), &t);
            prop_assert_eq!(k.second_intersection(x, &t).unwrap_err(), GeomError::TangentLine);
        }
    }

    #[test]
    fn center_of_homology_is_the_tangent_meet(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let (u, v) = k.base_points();
        let c = k.pencil().center_of_homology().unwrap();
        let tu = k.tangent_at(u).unwrap();
        let tv = k.tangent_at(v).unwrap();
        prop_assert_eq!(&c, &meet(&tu, &tv).unwrap());
        prop_assert_eq!(c, q.pole(&join(u, v).unwrap()).unwrap());
    }

    #[test]
    fn second_intersections(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let p = k.trace(1).remove(0);
        let t = k.tangent_at(&p).unwrap();
        let l = s.line_through(&p, &[&t]);
        let x = k.second_intersection(&p, &l).unwrap();
        prop_assert!(incident(&x, &l) && q.contains(&x) && x.apart(&p));
        prop_assert_eq!(k.second_intersection(&x, &l).unwrap(), p.clone());
        let off = s.point_off(&[]);
        prop_assume!(!q.contains(&off));
        prop_assert_eq!(k.second_intersection(&off, &join(&off, &p).unwrap()).unwrap_err(), GeomError::NotOnConic);
    }

    #[test]
    fn pascal_lines(mut s in sampler(), shift in 0usize..6) {
        let (k, _) = setup(&mut s);
        let h = k.trace(6);
        let hex = [&h[0], &h[1], &h[2], &h[3], &h[4], &h[5]];
        let [x, y, z] = k.pascal_points(hex).unwrap();
        prop_assert!(collinear(&x, &y, &z));
        let line = k.pascal_line(hex).unwrap();
        let mut r = hex;
        r.rotate_left(shift);
        prop_assert_eq!(k.pascal_line(r).unwrap(), line);
    }

    #[test]
    fn sixth_points_are_members(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let h = k.trace(5);
        let t = k.tangent_at(&h[4]).unwrap();
        let l = s.line_through(&h[4], &[&t]);
        let f = sixth_point(&h[0], &h[1], &h[2], &h[3], &h[4], &l).unwrap();
        prop_assert!(q.contains(&f) && incident(&f, &l));
        prop_assert_eq!(f, k.second_intersection(&h[4], &l).unwrap());
    }

    #[test]
    fn secants_through_any_point(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let p = s.point();
        let (a, b) = k.secants_through(&p).unwrap();
        prop_assert!(a.line.apart(&b.line));
        for sec in [a, b] {
            prop_assert!(incident(&p, &sec.line));
            let (m1, m2) = sec.members;
            prop_assert!(m1.apart(&m2));
            prop_assert!(q.contains(&m1) && q.contains(&m2));
            prop_assert!(incident(&m1, &sec.line) && incident(&m2, &sec.line));
        }
    }

    #[test]
    fn polars_and_poles(mut s in sampler()) {
        let (k, q) = setup(&mut s);
        let p = s.point();
        let polar = k.polar(&p).unwrap();
        prop_assert_eq!(&polar, &q.polar(&p).unwrap());
        prop_assert_eq!(k.pole(&polar).unwrap(), p.clone());
        let (a, b) = k.secants_through(&p).unwrap();
        prop_assert_eq!(k.polar_via(&p, &a).unwrap(), k.polar_via(&p, &b).unwrap());
        let l = s.line();
        prop_assert_eq!(k.pole(&l).unwrap(), q.pole(&l).unwrap());
    }

    #[test]
    fn dual_conic_holds_the_tangents(mut s in sampler()) {
        let (k, _) = setup(&mut s);
        let dual = k.dual_conic().unwrap();
        for x in k.trace(4) {
            let t = k.tangent_at(&x).unwrap();
            prop_assert!(dual.contains_line(&t).unwrap());
            prop_assert_eq!(dual.contact_point(&t).unwrap(), x);
        }
        let p: Point = k.trace(1).remove(0);
        let chord = join(&p, &k.trace(2)[1]).unwrap();
        prop_assert!(!dual.contains_line(&chord).unwrap());
    }
}
