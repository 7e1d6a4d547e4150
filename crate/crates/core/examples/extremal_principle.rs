//! Exact and approximate extremal principle at a common point, with every
//! certificate verified exactly.

use convex_calculus::extremality::{approximate_extremal_principle, exact_extremal_principle};
use convex_calculus::format::{fixtures_dir, InstanceDocument};
use convex_calculus::rational::{fmt_vector, rat};

fn main() {
    let doc = InstanceDocument::load(&fixtures_dir().join("boxes.json")).unwrap();
    let f = doc.fixture("facet-touching-boxes").unwrap();
    let x = f.point.clone().unwrap();
    let exact = exact_extremal_principle(&f.set1, &f.set2, &x).unwrap();
    println!("common normal at {}: {}", fmt_vector(&x), fmt_vector(&exact.unwrap()));
    for eps in [rat(1, 1), rat(1, 2), rat(1, 10), rat(1, 100)] {
        let c = approximate_extremal_principle(&f.set1, &f.set2, &x, &eps).unwrap();
        println!(
            "eps {eps}: x1 {} x2 {} x1* {} x2* {} verified {}",
            fmt_vector(&c.x1),
            fmt_vector(&c.x2),
            fmt_vector(&c.xstar1),
            fmt_vector(&c.xstar2),
            c.verify(&f.set1, &f.set2, &x).unwrap()
        );
    }
}
