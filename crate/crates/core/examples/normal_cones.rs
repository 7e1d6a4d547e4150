//! Normal cones of polyhedra, their sums and intersections, checked against
//! the defining inequality over all vertices and rays.

use convex_calculus::cone::{cone_intersect, cone_sum, normal_cone, PolyhedralCone};
use convex_calculus::oracle::definition_normal_cone_oracle;
use convex_calculus::polyhedron::ConvexSet;
use convex_calculus::rational::{fmt_vector, int, vec_of};

fn show(name: &str, c: &PolyhedralCone) {
    let gens: Vec<String> = c.generators.iter().map(|g| fmt_vector(g)).collect();
    let lin: Vec<String> = c.lineality.iter().map(|g| fmt_vector(g)).collect();
    println!("{name}: cone{gens:?} + span{lin:?}");
}

fn main() {
    let square = ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap();
    let origin = vec_of(&[0, 0]);
    let n = normal_cone(&square, &origin).unwrap();
    show("N(0; square)", &n);
    for g in &n.generators {
        println!("  {} passes the definition: {}", fmt_vector(g), definition_normal_cone_oracle(&square, &origin, g).unwrap());
    }
    println!(
        "  (1, 0) passes the definition: {}",
        definition_normal_cone_oracle(&square, &origin, &vec_of(&[1, 0])).unwrap()
    );

    let edge_mid = vec_of(&[1, 0]);
    let line = ConvexSet::from_ineqs(2, vec![(vec_of(&[1, -1]), int(0)), (vec_of(&[-1, 1]), int(0))]).unwrap();
    show("N((1,0); square)", &normal_cone(&square, &edge_mid).unwrap());
    let n_line = normal_cone(&line, &origin).unwrap();
    show("N(0; diagonal)", &n_line);
    show("sum", &cone_sum(&n, &n_line).unwrap());
    show("intersection", &cone_intersect(&n, &n_line.negate()).unwrap());
}
