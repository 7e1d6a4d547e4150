//! Independent oracles: a lattice scan for interior claims and a
//! boundary-point support sweep on random polytopes.

use convex_calculus::extremality::{check_extremal, support_point_near};
use convex_calculus::oracle::{
    grid_check_difference, grid_interior_oracle, random_boundary_point, random_pair_with_common_point,
    random_polytope, GridSpec,
};
use convex_calculus::polyhedron::difference_set;
use convex_calculus::rational::{fmt_vector, int, rat, vec_of, zeros};

fn main() {
    let square = convex_calculus::polyhedron::ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap();
    let g = GridSpec::new(2, rat(1, 4), 9).unwrap();
    for p in [vec_of(&[0, 0]), vec![rat(1, 2), rat(1, 2)]] {
        println!(
            "grid says {} interior to the square: {} (LP: {})",
            fmt_vector(&p),
            grid_interior_oracle(&square, &p, &g).unwrap(),
            square.interior_contains(&p).unwrap()
        );
    }

    let g = GridSpec::new(2, int(1), 401).unwrap();
    for seed in 1..=5 {
        let (a, b, _) = random_pair_with_common_point(seed, 2, 3).unwrap();
        let v = check_extremal(&a, &b, None).unwrap();
        let depth = difference_set(&a, &b).unwrap().hrep().ok().and_then(|h| convex_calculus::oracle::linf_depth(h, &zeros(2)));
        let check = grid_check_difference(&a, &b, &g, depth.as_ref(), !v.extremal).unwrap();
        println!("pair {seed}: extremal {} grid {:?}", v.extremal, check);
    }

    for seed in 1..=3 {
        let poly = random_polytope(seed, 3).unwrap();
        let x = random_boundary_point(&poly, seed).unwrap();
        let sp = support_point_near(&poly, &x, &rat(1, 100)).unwrap();
        println!(
            "polytope {seed}: boundary point {} supported by {} ({})",
            fmt_vector(&x),
            fmt_vector(&sp.functional),
            sp.verify(&poly, &x, &rat(1, 100)).unwrap()
        );
    }
}
