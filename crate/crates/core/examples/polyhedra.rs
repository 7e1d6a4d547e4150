//! H- and V-descriptions, conversion by double description, and the
//! Minkowski algebra behind the extremality test.

use convex_calculus::polyhedron::{difference_set, intersect, minkowski_sum, ConvexSet, VRep};
use convex_calculus::rational::{fmt_rational, fmt_vector, rat, vec_of, zeros};

fn describe(name: &str, s: &ConvexSet) {
    let h = s.hrep().unwrap();
    let v = s.vrep().unwrap();
    println!("{name}: {} inequalities, {} equalities", h.ineqs.len(), h.eqs.len());
    for r in &h.ineqs {
        println!("  {} . x <= {}", fmt_vector(&r.normal), fmt_rational(&r.rhs));
    }
    println!("  vertices {:?}", v.vertices.iter().map(|p| fmt_vector(p)).collect::<Vec<_>>());
    println!("  rays     {:?}", v.rays.iter().map(|p| fmt_vector(p)).collect::<Vec<_>>());
}

fn main() {
    let triangle = ConvexSet::from_vrep(
        VRep::new(2, vec![vec_of(&[0, 0]), vec_of(&[2, 0]), vec_of(&[0, 2])], vec![]).unwrap(),
    );
    describe("triangle", &triangle);

    let wedge = ConvexSet::from_ineqs(2, vec![(vec_of(&[-1, 1]), rat(0, 1)), (vec_of(&[-1, -1]), rat(0, 1))]).unwrap();
    describe("wedge x >= |y|", &wedge);

    let square = ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap();
    describe("triangle + square", &minkowski_sum(&triangle, &square).unwrap());
    describe("triangle - square", &difference_set(&triangle, &square).unwrap());
    describe("wedge ∩ square", &intersect(&wedge, &square).unwrap());

    let d = difference_set(&triangle, &square).unwrap();
    println!("0 interior to triangle - square: {}", d.interior_contains(&zeros(2)).unwrap());
    let (center, r) = triangle.chebyshev().unwrap().unwrap();
    println!("largest box in the triangle: center {}, radius {}", fmt_vector(&center), fmt_rational(&r));
}
