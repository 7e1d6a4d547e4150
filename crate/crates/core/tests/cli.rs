//! The command-line binary: exit codes, report round-trips, fixture
//! directory override and figure output.

use std::process::{Command, Output};

use convex_calculus::report::Report;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convex-calculus")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = bin(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = Report::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    assert_eq!(report.to_json(), text, "report does not round-trip");
    (report, out.status.code().unwrap())
}

#[test]
fn halfplane_and_axis_are_not_extremal() {
    let (r, code) = json(&["check-extremal", "halfplane-vs-axis", "upper-halfplane", "vertical-axis"]);
    assert_eq!(code, 0);
    let d = &r.verdicts[0].details;
    assert_eq!(d["extremal"], false);
    assert_eq!(d["interior_ball_radius"], "1");
}

#[test]
fn halfplanes_are_extremal_with_a_small_translation() {
    let (r, code) = json(&["check-extremal", "halfplanes", "lower", "upper", "--epsilon", "1/4"]);
    assert_eq!(code, 0);
    assert_eq!(r.verdicts[0].details["extremal"], true);
    assert_eq!(r.verdicts[0].details["perturbation"], serde_json::json!(["0", "-1/4"]));
}

#[test]
fn unknown_names_and_bad_input_exit_nonzero() {
    let out = bin(&["check-extremal", "halfplanes", "lower", "missing"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"sets\": {\n    \"a\": {\"kind\": \"hrep\", \"dim\": 2,, }\n}").unwrap();
    let out = bin(&["support", path.to_str().unwrap(), "a", "b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn rule_support_and_convolution_values() {
    let (r, _) = json(&["intersection-rule", "halfplane-vs-axis", "upper-halfplane", "vertical-axis", "origin"]);
    assert!(r.passed);
    assert_eq!(r.verdicts[1].summary, "EQUAL");
    assert_eq!(r.verdicts[0].details["classical_interiority"], false);

    let (r, _) = json(&["support", "boxes", "unit-square", "ones"]);
    assert_eq!(r.verdicts[0].summary, "2");

    let (r, code) = json(&["infconv", "boxes", "unit-square", "right-square", "up"]);
    assert_eq!(code, 0);
    assert_eq!(r.verdicts[0].summary, "1");
    assert!(r.verdicts[0].details["witnesses"].is_array());
}

#[test]
fn separation_and_extremal_principle() {
    let (r, code) = json(&["separate", "halfplanes", "lower", "upper"]);
    assert_eq!(code, 0);
    assert_eq!(r.verdicts[0].details["functional"], serde_json::json!(["0", "1"]));

    let (r, code) = json(&["ep", "halfplanes", "lower", "upper", "origin", "1/10"]);
    assert_eq!(code, 0);
    assert_eq!(r.verdicts.len(), 2);
}

#[test]
fn fixture_directory_can_be_overridden() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("mine.json"),
        r#"{"sets": {"s": {"kind": "vrep", "dim": 1, "vertices": [["1/3"], ["2"]], "rays": []}},
            "functionals": {"f": ["3"]}}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_convex-calculus"))
        .args(["--json", "support", "mine", "s", "f"])
        .env("CONVEX_FIXTURES", dir.path())
        .output()
        .unwrap();
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.verdicts[0].summary, "6");
}

#[test]
fn plots_are_deterministic_and_planar_only() {
    let dir = tempfile::tempdir().unwrap();
    let render = |name: &str| {
        let path = dir.path().join(name);
        let out = bin(&["plot", "halfplanes", "lower", "upper", "separator(lower,upper)", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read_to_string(path).unwrap()
    };
    let a = render("a.svg");
    assert_eq!(a, render("b.svg"));
    assert!(a.contains("stroke-dasharray"));

    let out = bin(&["plot", "halfplane-vs-axis", "halfplane-vs-axis", "normal(upper-halfplane,origin)", "--out",
        dir.path().join("c.svg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = bin(&["plot", "polytopes", "cube", "--out", dir.path().join("d.svg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension 3"));
}

#[test]
fn small_suite_runs_are_reproducible() {
    let args = ["verify-suite", "--seed-range", "1..6", "--dims", "2,3", "--no-fixtures"];
    let (a, code) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.verdicts.len(), 11);
}

#[test]
fn injected_cone_sum_bug_is_caught() {
    let (r, code) = json(&["verify-suite", "--seed-range", "1..30", "--dims", "2", "--inject-bug", "cone-sum"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = r.verdicts.iter().filter(|v| !v.passed).map(|v| v.name.as_str()).collect();
    assert_eq!(failed, vec!["intersection-rule"]);
}
