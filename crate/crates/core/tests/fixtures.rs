//! Expected answers on the named fixtures.

use convex_calculus::calculus::{inf_convolution_support, qualification_report, support_value};
use convex_calculus::extremality::check_extremal;
use convex_calculus::format::{fixtures_dir, load_fixture_documents, InstanceDocument};
use convex_calculus::rational::{int, Extended};

fn doc(name: &str) -> InstanceDocument {
    InstanceDocument::load(&fixtures_dir().join(format!("{name}.json"))).unwrap()
}

#[test]
fn documents_reserialize_identically() {
    for (name, d) in load_fixture_documents(&fixtures_dir()).unwrap() {
        let text = d.to_json();
        let again = InstanceDocument::parse(&text).unwrap().to_json();
        assert_eq!(text, again, "{name}");
    }
}

#[test]
fn extremality_of_named_pairs() {
    let expected = [
        ("boxes", "facet-touching-boxes", true),
        ("boxes", "corner-touching-boxes", true),
        ("boxes", "overlapping-boxes", false),
        ("boxes", "same-square-center", false),
        ("boxes", "separated-boxes", true),
        ("halfplanes", "halfplanes", true),
        ("halfplane-vs-axis", "halfplane-vs-axis", false),
    ];
    for (file, fixture, extremal) in expected {
        let f = doc(file).fixture(fixture).unwrap();
        assert_eq!(check_extremal(&f.set1, &f.set2, None).unwrap().extremal, extremal, "{fixture}");
    }
}

#[test]
fn halfplane_and_axis_qualification() {
    let f = doc("halfplane-vs-axis").fixture("halfplane-vs-axis").unwrap();
    let qc = qualification_report(&f.set1, &f.set2, &f.point.unwrap()).unwrap();
    assert!(!qc.classical_interiority);
    assert!(qc.difference_interiority && qc.bounded_extremality && qc.core_condition);
}

#[test]
fn support_values_on_boxes() {
    let d = doc("boxes");
    let square = d.set("unit-square").unwrap();
    assert_eq!(support_value(&square, &d.functional("ones").unwrap()).unwrap().value, Extended::Finite(int(2)));
    let right = d.set("right-square").unwrap();
    let conv = inf_convolution_support(&square, &right, &d.functional("up").unwrap()).unwrap();
    assert_eq!(conv.value, Extended::Finite(int(1)));
}

#[test]
fn overlapping_squares_support_identity() {
    // the intersection is [1/2, 1] x [0, 1], whose support at (1, 1) is 2
    let d = doc("boxes");
    let (a, b) = (d.set("unit-square").unwrap(), d.set("shifted-square").unwrap());
    let v = convex_calculus::calculus::support_intersection_theorem(&a, &b, &d.functional("ones").unwrap()).unwrap();
    assert!(v.hypotheses_met && v.equal && v.holds());
    assert_eq!(v.lhs, Extended::Finite(int(2)));
    let (w1, w2) = v.witnesses.unwrap();
    assert_eq!(convex_calculus::rational::add(&w1, &w2), d.functional("ones").unwrap());
}
