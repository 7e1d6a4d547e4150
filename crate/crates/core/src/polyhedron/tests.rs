use super::*;
use crate::rational::{int, rat, vec_of};

fn square() -> ConvexSet {
    ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap()
}

#[test]
fn square_vertices() {
    let v = square().to_vrep().unwrap();
    assert_eq!(
        v.vertices,
        vec![vec_of(&[0, 0]), vec_of(&[0, 1]), vec_of(&[1, 0]), vec_of(&[1, 1])]
    );
    assert!(v.rays.is_empty());
}

#[test]
fn halfplane_has_line() {
    let s = ConvexSet::from_ineqs(2, vec![(vec_of(&[0, 1]), int(0))]).unwrap();
    let v = s.to_vrep().unwrap();
    assert_eq!(v.vertices, vec![vec_of(&[0, 0])]);
    assert_eq!(v.rays, vec![vec_of(&[-1, 0]), vec_of(&[0, -1]), vec_of(&[1, 0])]);
    let back = vrep_to_hrep(&v, DdLimits::default()).unwrap();
    assert_eq!(back.ineqs, vec![Row::new(vec_of(&[0, 1]), int(0))]);
}

#[test]
fn triangle_round_trip() {
    let v = VRep::new(2, vec![vec_of(&[0, 0]), vec_of(&[2, 0]), vec_of(&[0, 2]), vec_of(&[1, 1])], vec![])
        .unwrap();
    let h = vrep_to_hrep(&v, DdLimits::default()).unwrap();
    assert_eq!(h.ineqs.len(), 3);
    let back = hrep_to_vrep(&h, DdLimits::default()).unwrap();
    assert_eq!(back.vertices.len(), 3);
}

#[test]
fn segment_has_equality() {
    let v = VRep::new(2, vec![vec_of(&[0, 0]), vec_of(&[1, 1])], vec![]).unwrap();
    let h = vrep_to_hrep(&v, DdLimits::default()).unwrap();
    assert_eq!(h.eqs.len(), 1);
    assert_eq!(h.ineqs.len(), 2);
    let s = ConvexSet::from_vrep(v);
    assert!(!s.interior_contains(&[rat(1, 2), rat(1, 2)]).unwrap());
    assert!(!s.core_contains(&[rat(1, 2), rat(1, 2)]).unwrap());
}

#[test]
fn canonicalize_finds_implicit_equality_and_redundancy() {
    let h = HRep::new(
        2,
        vec![
            Row::new(vec_of(&[1, 0]), int(0)),
            Row::new(vec_of(&[-1, 0]), int(0)),
            Row::new(vec_of(&[0, 1]), int(1)),
            Row::new(vec_of(&[0, 2]), int(5)),
            Row::new(vec_of(&[0, -1]), int(0)),
        ],
        vec![],
    )
    .unwrap();
    let c = h.canonicalize().unwrap();
    assert_eq!(c.eqs, vec![Row::new(vec_of(&[1, 0]), int(0))]);
    assert_eq!(
        c.ineqs,
        vec![Row::new(vec_of(&[0, -1]), int(0)), Row::new(vec_of(&[0, 1]), int(1))]
    );
}

#[test]
fn canonical_empty() {
    let h = HRep::new(
        1,
        vec![Row::new(vec_of(&[1]), int(0)), Row::new(vec_of(&[-1]), int(-2))],
        vec![],
    )
    .unwrap();
    assert_eq!(h.canonicalize().unwrap(), HRep::empty(1));
}

#[test]
fn interior_and_core_agree_on_square() {
    let s = square();
    for (p, inside) in [
        (vec![rat(1, 2), rat(1, 2)], true),
        (vec![int(0), rat(1, 2)], false),
        (vec![int(1), int(1)], false),
    ] {
        assert_eq!(s.interior_contains(&p).unwrap(), inside);
        assert_eq!(s.core_contains(&p).unwrap(), inside);
        let v = ConvexSet::from_vrep(s.to_vrep().unwrap());
        assert_eq!(v.core_contains(&p).unwrap(), inside);
    }
}

#[test]
fn minkowski_of_squares() {
    let s = minkowski_sum(&square(), &square()).unwrap();
    let expect = ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[2, 2])).unwrap();
    assert!(s.same_set(&expect).unwrap());
    assert_eq!(s.to_vrep().unwrap().vertices.len(), 4);
}

#[test]
fn difference_of_separated_halfplanes() {
    let up = ConvexSet::from_ineqs(2, vec![(vec_of(&[0, -1]), int(0))]).unwrap();
    let down = ConvexSet::from_ineqs(2, vec![(vec_of(&[0, 1]), int(0))]).unwrap();
    let d = difference_set(&up, &down).unwrap();
    assert!(d.contains_point(&vec_of(&[0, 0])).unwrap());
    assert!(!d.interior_contains(&vec_of(&[0, 0])).unwrap());
    assert_eq!(d.hrep().unwrap().ineqs, vec![Row::new(vec_of(&[0, -1]), int(0))]);
}

#[test]
fn chebyshev_square() {
    let (x, r) = square().chebyshev().unwrap().unwrap();
    assert_eq!(r, rat(1, 2));
    assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
}

#[test]
fn translate_and_negate_commute_with_membership() {
    let s = square().translate(&vec_of(&[3, -1])).unwrap().negate();
    assert!(s.contains_point(&vec_of(&[-4, 0])).unwrap());
    assert!(!s.contains_point(&vec_of(&[4, 0])).unwrap());
}

#[test]
fn tidy_keeps_infeasibility_from_projection() {
    let h = tidy(
        2,
        vec![Row::new(vec_of(&[-1, 0]), int(0))],
        vec![Row::new(vec_of(&[1, 0]), rat(-1, 2))],
    );
    assert!(h.is_empty().unwrap());
    let h = tidy(
        1,
        vec![],
        vec![Row::new(vec_of(&[1]), int(0)), Row::new(vec_of(&[2]), int(1))],
    );
    assert!(h.is_empty().unwrap());
}

#[test]
fn lifted_interior_radius_agrees_with_minkowski_route() {
    for seed in 0..40u64 {
        let dim = 2 + (seed % 2) as usize;
        let ((a, b, _), _) = crate::oracle::random_pair_with_mode(seed, dim, 3).unwrap();
        let origin = crate::rational::zeros(dim);
        let via_sum = difference_set(&a, &b).unwrap().interior_contains(&origin).unwrap();
        let lifted = difference_interior_radius(&a, &b).unwrap();
        assert_eq!(via_sum, lifted.is_some(), "seed {seed}");
        if let Some(r) = lifted {
            let d = difference_set(&a, &b).unwrap();
            let cube = ConvexSet::boxed(&vec![-r.clone(); dim], &vec![r.clone(); dim]).unwrap();
            assert!(d.contains_set(&cube).unwrap(), "seed {seed}");
        }
    }
}
