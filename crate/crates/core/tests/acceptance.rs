//! End-to-end acceptance run: the default verification suite twice, plus the
//! halfplane-and-axis fixture. Prints one PASS/FAIL line per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use convex_calculus::calculus::{default_probes, intersection_rule, qualification_report};
use convex_calculus::extremality::is_extremal_system;
use convex_calculus::format::{fixtures_dir, load_fixtures, InstanceDocument};
use convex_calculus::suite::{instances, run_suite, SuiteConfig, Tallies, Tally};

// written straight to stderr so the lines survive test output capture
fn line(n: usize, title: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n} [{tag}] {title}: {detail}");
}

fn clean(t: &Tally) -> bool {
    t.failures.is_empty()
}

fn counts(t: &Tally) -> String {
    format!("{} checked, {} skipped, {} failed", t.checked, t.skipped, t.failures.len())
}

fn all_clean(t: &Tallies, names: &[&str]) -> (bool, String) {
    let ok = names.iter().all(|n| clean(t.sweep(n)));
    let detail = names
        .iter()
        .map(|n| format!("{n} {}", counts(t.sweep(n))))
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn halfplane_axis_reproduces() -> (bool, String) {
    let doc = InstanceDocument::load(&fixtures_dir().join("halfplane-vs-axis.json")).unwrap();
    let f = doc.fixture("halfplane-vs-axis").unwrap();
    let x = f.point.clone().unwrap();
    let qc = qualification_report(&f.set1, &f.set2, &x).unwrap();
    let rule = intersection_rule(&f.set1, &f.set2, &x, &default_probes(2)).unwrap();
    let ok = !qc.classical_interiority && qc.difference_interiority && qc.bounded_extremality && rule.equal;
    (
        ok,
        format!(
            "classical {} difference {} bounded {} rule equal {}",
            qc.classical_interiority, qc.difference_interiority, qc.bounded_extremality, rule.equal
        ),
    )
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    let insts = instances(&cfg).unwrap();
    let fixtures = load_fixtures(&fixtures_dir()).unwrap();
    let generated = insts.len() - fixtures.len();
    let command = vec!["convex-calculus".to_string(), "verify-suite".to_string()];

    let start = Instant::now();
    let (first, tallies) = run_suite(&cfg, command.clone()).unwrap();
    let elapsed = start.elapsed();
    let (second, _) = run_suite(&cfg, command).unwrap();

    let mut results = Vec::new();

    let (ok, detail) = all_clean(&tallies, &["extremality-criterion", "grid-oracle"]);
    let ok = ok
        && generated >= 200
        && tallies.sweep("grid-oracle").checked > 0
        && elapsed < Duration::from_secs(120);
    results.push((
        "extremality criterion on the corpus and fixtures",
        ok,
        format!("{generated} generated + {} fixtures in {:.1}s; {detail}", fixtures.len(), elapsed.as_secs_f64()),
    ));

    let (ok, detail) = all_clean(&tallies, &["separation-chain"]);
    results.push(("separation and common normals match extremality", ok, detail));

    let (ok, detail) = all_clean(&tallies, &["approximate-extremal-principle"]);
    let ok = ok && tallies.sweep("approximate-extremal-principle").checked > 0;
    results.push(("approximate extremal principle certificates", ok, detail));

    let (ok, detail) = all_clean(&tallies, &["intersection-rule", "rule-inclusion"]);
    let (fx_ok, fx_detail) = halfplane_axis_reproduces();
    results.push(("normal cone intersection rule", ok && fx_ok, format!("{detail}; fixture {fx_detail}")));

    let (ok, detail) = all_clean(&tallies, &["qualification-conditions"]);
    results.push(("core and interior agree, qualification implications", ok, detail));

    let (ok, detail) = all_clean(&tallies, &["support-intersection"]);
    results.push(("support function of an intersection", ok, detail));

    let (ok, detail) = all_clean(&tallies, &["support-points"]);
    let ok = ok && tallies.sweep("support-points").checked == cfg.boundary_points;
    results.push(("support points at boundary points", ok, detail));

    let (ok, detail) = all_clean(&tallies, &["lp-certificates"]);
    let ok = ok && tallies.sweep("lp-certificates").checked >= cfg.lp_count;
    results.push(("LP certificates and mutation detection", ok, detail));

    let same = first.to_json() == second.to_json();
    results.push(("byte-identical reports", same, format!("{} bytes", first.to_json().len())));

    for (i, (title, ok, detail)) in results.iter().enumerate() {
        line(i + 1, title, *ok, detail);
    }
    let failed: Vec<usize> = results.iter().enumerate().filter(|r| !r.1 .1).map(|r| r.0 + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(first.passed);
}

#[test]
fn fixtures_are_decided() {
    for f in load_fixtures(&fixtures_dir()).unwrap() {
        is_extremal_system(&f.set1, &f.set2).unwrap();
    }
}
