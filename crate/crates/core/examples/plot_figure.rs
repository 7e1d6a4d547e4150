//! Writes an SVG of the halfplane and axis pair with both normal cones at
//! the origin, and one of two halfplanes with their separating line.

use convex_calculus::cone::normal_cone;
use convex_calculus::extremality::separate;
use convex_calculus::format::{fixtures_dir, InstanceDocument};
use convex_calculus::svg::Plot;

fn main() {
    let out = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(std::env::temp_dir);

    let doc = InstanceDocument::load(&fixtures_dir().join("halfplane-vs-axis.json")).unwrap();
    let f = doc.fixture("halfplane-vs-axis").unwrap();
    let x = f.point.clone().unwrap();
    let mut plot = Plot::new();
    plot.add_set("Ω1", &f.set1).unwrap();
    plot.add_set("Ω2", &f.set2).unwrap();
    plot.add_cone("N(0; Ω1)", &x, &normal_cone(&f.set1, &x).unwrap()).unwrap();
    plot.add_cone("N(0; Ω2)", &x, &normal_cone(&f.set2, &x).unwrap()).unwrap();
    let path = out.join("halfplane-vs-axis.svg");
    std::fs::write(&path, plot.render().unwrap()).unwrap();
    println!("wrote {}", path.display());

    let doc = InstanceDocument::load(&fixtures_dir().join("halfplanes.json")).unwrap();
    let (lower, upper) = (doc.set("lower").unwrap(), doc.set("upper").unwrap());
    let c = separate(&lower, &upper).unwrap().unwrap();
    let mut plot = Plot::new();
    plot.add_set("lower", &lower).unwrap();
    plot.add_set("upper", &upper).unwrap();
    plot.add_separator("separator", &c.functional, c.sup1.finite().unwrap()).unwrap();
    let path = out.join("halfplanes.svg");
    std::fs::write(&path, plot.render().unwrap()).unwrap();
    println!("wrote {}", path.display());
}
