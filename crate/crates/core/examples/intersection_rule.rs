//! Normal cone of an intersection versus the sum of normal cones, with the
//! qualification conditions that decide when they agree.
//!
//! The upper halfplane and the vertical axis meet only on the boundary of the
//! halfplane, so the classical interiority condition fails, yet the
//! difference of the two sets is the whole plane and the rule holds.

use convex_calculus::calculus::{default_probes, intersection_rule, qualification_report};
use convex_calculus::format::{fixtures_dir, InstanceDocument};
use convex_calculus::rational::fmt_vector;

fn main() {
    for (file, fixture) in [("halfplane-vs-axis.json", "halfplane-vs-axis"), ("boxes.json", "corner-touching-boxes")] {
        let doc = InstanceDocument::load(&fixtures_dir().join(file)).unwrap();
        let f = doc.fixture(fixture).unwrap();
        let x = f.point.clone().unwrap();
        let qc = qualification_report(&f.set1, &f.set2, &x).unwrap();
        println!("{fixture} at {}", fmt_vector(&x));
        println!(
            "  classical {} difference {} bounded extremality {} core {}",
            qc.classical_interiority, qc.difference_interiority, qc.bounded_extremality, qc.core_condition
        );
        let rule = intersection_rule(&f.set1, &f.set2, &x, &default_probes(2)).unwrap();
        println!("  sum inside intersection cone: {}, equal: {}", rule.rhs_in_lhs, rule.equal);
        println!(
            "  N(x; Ω1 ∩ Ω2) generators {:?} lineality {:?}",
            rule.lhs.generators.iter().map(|g| fmt_vector(g)).collect::<Vec<_>>(),
            rule.lhs.lineality.iter().map(|g| fmt_vector(g)).collect::<Vec<_>>()
        );
    }
}
