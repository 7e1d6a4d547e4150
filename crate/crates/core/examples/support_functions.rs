//! Support functions, infimal convolution and the support function of an
//! intersection.

use convex_calculus::calculus::{inf_convolution_support, support_intersection_theorem, support_value};
use convex_calculus::format::{fixtures_dir, InstanceDocument};
use convex_calculus::oracle::vertex_support_oracle;
use convex_calculus::rational::{fmt_rational, fmt_vector};

fn main() {
    let doc = InstanceDocument::load(&fixtures_dir().join("boxes.json")).unwrap();
    let square = doc.set("unit-square").unwrap();
    let shifted = doc.set("shifted-square").unwrap();
    for name in ["ones", "up", "minus-ones"] {
        let xstar = doc.functional(name).unwrap();
        let sv = support_value(&square, &xstar).unwrap();
        println!(
            "σ(unit-square, {}) = {} (vertex enumeration: {})",
            fmt_vector(&xstar),
            sv.value,
            fmt_rational(&vertex_support_oracle(&square, &xstar).unwrap())
        );
        let conv = inf_convolution_support(&square, &shifted, &xstar).unwrap();
        let v = support_intersection_theorem(&square, &shifted, &xstar).unwrap();
        println!(
            "  infimal convolution with shifted-square {} via {:?}; support of intersection {}; holds {}",
            conv.value,
            conv.witnesses.map(|(a, b)| (fmt_vector(&a), fmt_vector(&b))),
            v.lhs,
            v.holds()
        );
    }
}
