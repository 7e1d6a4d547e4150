//! Extremal systems: decide extremality, produce a small separating
//! translation, or report the radius of a box inside the difference set.

use convex_calculus::extremality::{check_extremal, separate, translate_separates};
use convex_calculus::format::{fixtures_dir, InstanceDocument};
use convex_calculus::rational::{fmt_rational, fmt_vector, rat};

fn main() {
    let boxes = InstanceDocument::load(&fixtures_dir().join("boxes.json")).unwrap();
    let eps = rat(1, 4);
    for name in ["facet-touching-boxes", "corner-touching-boxes", "overlapping-boxes", "separated-boxes"] {
        let f = boxes.fixture(name).unwrap();
        let v = check_extremal(&f.set1, &f.set2, Some(&eps)).unwrap();
        if v.extremal {
            let a = v.perturbation.unwrap();
            println!(
                "{name}: extremal, translation {} separates: {}",
                fmt_vector(&a),
                translate_separates(&f.set1, &f.set2, &a).unwrap()
            );
            let c = separate(&f.set1, &f.set2).unwrap().unwrap();
            println!(
                "  separating functional {}: sup {} <= inf {}",
                fmt_vector(&c.functional),
                c.sup1,
                c.inf2
            );
        } else {
            println!(
                "{name}: not extremal, box of radius {} inside the difference",
                fmt_rational(&v.interior_ball_radius.unwrap())
            );
        }
    }
}
