//! Command-line surface. Every subcommand builds a [`Report`]; the process
//! exit code is 0 exactly when every verdict in it passed, 1 when some
//! verdict failed and 2 on usage, input or internal errors.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use serde_json::json;

use crate::calculus::{
    default_probes, inf_convolution_support, intersection_rule, qualification_report,
    support_intersection_theorem, support_value,
};
use crate::cone::{normal_cone, PolyhedralCone};
use crate::error::{Error, Result};
use crate::extremality::{
    approximate_extremal_principle, check_extremal, exact_extremal_principle, separate,
    translate_separates,
};
use crate::format::{resolve_instance_path, InstanceDocument};
use crate::oracle::vertex_support_oracle;
use crate::polyhedron::{Ball, ConvexSet};
use crate::rational::{
    add, dot, fmt_rational, fmt_vector, neg, norm_inf, parse_rational, zeros, Extended, Rational,
};
use crate::report::{
    approx_ep_json, extremality_json, infconv_json, qc_json, rule_json, separation_json,
    support_json, support_theorem_json, vec_json, Report,
};
use crate::suite::{run_suite, Bug, SuiteConfig};
use crate::svg::Plot;

#[derive(Parser, Debug)]
#[command(name = "convex-calculus", version, about = "Exact calculus of convex polyhedra")]
pub struct Cli {
    /// Emit the machine-readable report instead of the human one.
    #[arg(long, global = true)]
    pub json: bool,

    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, action = ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether two sets form an extremal system.
    CheckExtremal {
        file: String,
        set1: String,
        set2: String,
        /// Size bound for the reported separating translation.
        #[arg(long, default_value = "1")]
        epsilon: String,
    },
    /// Compare N(x; Ω1 ∩ Ω2) with N(x; Ω1) + N(x; Ω2) and report the
    /// qualification conditions.
    IntersectionRule {
        file: String,
        set1: String,
        set2: String,
        point: String,
    },
    /// Support function value of a set at a functional.
    Support {
        file: String,
        set: String,
        functional: String,
    },
    /// Infimal convolution of two support functions, compared with the
    /// support function of the intersection.
    Infconv {
        file: String,
        set1: String,
        set2: String,
        functional: String,
    },
    /// Separating functional for an extremal pair.
    Separate {
        file: String,
        set1: String,
        set2: String,
    },
    /// Exact and ε-approximate extremal principle at a common point.
    Ep {
        file: String,
        set1: String,
        set2: String,
        point: String,
        epsilon: String,
    },
    /// Run every verification sweep over the generated corpus and fixtures.
    VerifySuite {
        /// Inclusive seed range `a..b`.
        #[arg(long, default_value = "1..200")]
        seed_range: String,
        /// Comma-separated dimensions.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Skip the fixture directory.
        #[arg(long)]
        no_fixtures: bool,
        /// Record wall-clock timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
        #[arg(long, hide = true)]
        inject_bug: Option<String>,
    },
    /// Draw planar sets, `normal(SET,POINT)` fans, `separator(SET1,SET2)`
    /// lines or whole fixtures to an SVG file.
    Plot {
        file: String,
        #[arg(required = true)]
        names: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` (program name first), runs the command, prints the report
/// and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_logging(cli.verbose);
    let mut echo = vec!["convex-calculus".to_string()];
    echo.extend(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()));
    match execute(&cli, echo) {
        Ok(report) => {
            let text = if cli.json { report.to_json() } else { report.render_human() };
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
}

fn load(file: &str) -> Result<InstanceDocument> {
    let path = resolve_instance_path(file);
    log::info!("loading {}", path.display());
    InstanceDocument::load(&path)
}

fn level(e: &Extended) -> String {
    match e.finite() {
        Some(q) => fmt_rational(q),
        None => e.to_string(),
    }
}

pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<Report> {
    let mut report = Report::new(echo);
    match &cli.command {
        Command::CheckExtremal { file, set1, set2, epsilon } => {
            let doc = load(file)?;
            let (s1, s2) = (doc.set(set1)?, doc.set(set2)?);
            let eps = parse_rational(epsilon)?;
            let v = check_extremal(&s1, &s2, Some(&eps))?;
            let (passed, summary) = if v.extremal {
                let a = v.perturbation.as_ref().ok_or_else(|| Error::Internal("missing perturbation".into()))?;
                let ok = norm_inf(a) <= eps && translate_separates(&s1, &s2, a)?;
                (ok, format!("extremal; translating {set1} by {} separates the pair", fmt_vector(a)))
            } else {
                let r = v.interior_ball_radius.clone().ok_or_else(|| Error::Internal("missing radius".into()))?;
                let d = crate::polyhedron::difference_set(&s1, &s2)?;
                let ok = d.contains_set(&Ball::new(zeros(s1.dim()), r.clone())?.to_set())?;
                (ok, format!("not extremal; the difference contains the box of radius {}", fmt_rational(&r)))
            };
            report.push("extremality", passed, summary, extremality_json(&v));
        }
        Command::IntersectionRule { file, set1, set2, point } => {
            let doc = load(file)?;
            let (s1, s2, x) = (doc.set(set1)?, doc.set(set2)?, doc.point(point)?);
            let qc = qualification_report(&s1, &s2, &x)?;
            let summary = format!(
                "classical {}, difference {}, bounded extremality {}, core {}",
                qc.classical_interiority, qc.difference_interiority, qc.bounded_extremality, qc.core_condition
            );
            // consistency between the conditions, not their truth
            let consistent = qc.difference_interiority == qc.core_condition
                && (!qc.classical_interiority || qc.difference_interiority)
                && (!qc.difference_interiority || qc.bounded_extremality);
            report.push("qualification", consistent, summary, qc_json(&qc));

            let rule = intersection_rule(&s1, &s2, &x, &default_probes(s1.dim()))?;
            let (n1, n2) = (normal_cone(&s1, &x)?, normal_cone(&s2, &x)?);
            let passed = rule.rhs_in_lhs
                && rule.decompositions_ok(&n1, &n2)?
                && (!qc.bounded_extremality || rule.equal);
            let summary = if rule.equal {
                "EQUAL".to_string()
            } else {
                "STRICT INCLUSION: N(x; Ω1) + N(x; Ω2) is a proper subcone".to_string()
            };
            report.push("intersection-rule", passed, summary, rule_json(&rule));
        }
        Command::Support { file, set, functional } => {
            let doc = load(file)?;
            let (s, xstar) = (doc.set(set)?, doc.functional(functional)?);
            let sv = support_value(&s, &xstar)?;
            let passed = match (&sv.value, &sv.maximizer, &sv.ray) {
                (Extended::Finite(v), Some(x), _) => {
                    let mut ok = s.contains_point(x)? && dot(&xstar, x) == *v;
                    if s.is_bounded()? {
                        ok &= vertex_support_oracle(&s, &xstar)? == *v;
                    }
                    ok
                }
                (Extended::PosInfinity, _, Some(r)) => {
                    dot(&xstar, r) > Rational::from_integer(0.into()) && is_recession(&s, r)?
                }
                _ => false,
            };
            report.push("support", passed, level(&sv.value), support_json(&sv));
        }
        Command::Infconv { file, set1, set2, functional } => {
            let doc = load(file)?;
            let (s1, s2, xstar) = (doc.set(set1)?, doc.set(set2)?, doc.functional(functional)?);
            let conv = inf_convolution_support(&s1, &s2, &xstar)?;
            let passed = match &conv.witnesses {
                Some((a, b)) => {
                    add(a, b) == xstar
                        && match (support_value(&s1, a)?.value, support_value(&s2, b)?.value) {
                            (Extended::Finite(p), Extended::Finite(q)) => conv.value == Extended::Finite(p + q),
                            _ => false,
                        }
                }
                // -inf exactly when the intersection is empty; +inf comes from a
                // Farkas-certified infeasible multiplier system
                None => match conv.value {
                    Extended::NegInfinity => crate::polyhedron::intersect(&s1, &s2)?.is_empty()?,
                    Extended::PosInfinity => true,
                    Extended::Finite(_) => false,
                },
            };
            report.push("infimal-convolution", passed, level(&conv.value), infconv_json(&conv));
            let v = support_intersection_theorem(&s1, &s2, &xstar)?;
            let summary = format!(
                "support of intersection {} vs {}; hypotheses {}",
                level(&v.lhs),
                level(&v.rhs),
                if v.hypotheses_met { "met" } else { "not met" }
            );
            report.push("support-of-intersection", v.holds(), summary, support_theorem_json(&v));
        }
        Command::Separate { file, set1, set2 } => {
            let doc = load(file)?;
            let (s1, s2) = (doc.set(set1)?, doc.set(set2)?);
            match separate(&s1, &s2)? {
                Some(c) => {
                    let summary = format!(
                        "separated by {}: sup over {set1} = {} <= inf over {set2} = {}",
                        fmt_vector(&c.functional),
                        level(&c.sup1),
                        level(&c.inf2)
                    );
                    report.push("separation", c.verify(&s1, &s2)?, summary, separation_json(&c));
                }
                None => {
                    let v = check_extremal(&s1, &s2, None)?;
                    report.push(
                        "separation",
                        !v.extremal,
                        "not separable: 0 is interior to the difference",
                        extremality_json(&v),
                    );
                }
            }
        }
        Command::Ep { file, set1, set2, point, epsilon } => {
            let doc = load(file)?;
            let (s1, s2, x) = (doc.set(set1)?, doc.set(set2)?, doc.point(point)?);
            let eps = parse_rational(epsilon)?;
            let v = check_extremal(&s1, &s2, None)?;
            if !v.extremal {
                report.push(
                    "extremal-principle",
                    true,
                    "not extremal; the principle does not apply",
                    extremality_json(&v),
                );
                return Ok(report);
            }
            let exact = exact_extremal_principle(&s1, &s2, &x)?;
            let exact_ok = match &exact {
                Some(w) => normal_cone(&s1, &x)?.contains(w)? && normal_cone(&s2, &x)?.contains(&neg(w))?,
                None => false,
            };
            report.push(
                "exact-extremal-principle",
                exact_ok,
                match &exact {
                    Some(w) => format!("common normal {}", fmt_vector(w)),
                    None => "no common normal".to_string(),
                },
                json!({"witness": exact.as_ref().map(|w| vec_json(w))}),
            );
            let cert = approximate_extremal_principle(&s1, &s2, &x, &eps)?;
            let summary = format!(
                "x1* = {}, x2* = {} at x1 = {}, x2 = {}",
                fmt_vector(&cert.xstar1),
                fmt_vector(&cert.xstar2),
                fmt_vector(&cert.x1),
                fmt_vector(&cert.x2)
            );
            report.push("approximate-extremal-principle", cert.verify(&s1, &s2, &x)?, summary, approx_ep_json(&cert));
        }
        Command::VerifySuite { seed_range, dims, parallel, no_fixtures, timings, inject_bug } => {
            let cfg = SuiteConfig {
                seeds: parse_seed_range(seed_range)?,
                dims: dims.clone(),
                parallel: *parallel,
                include_fixtures: !no_fixtures,
                inject: inject_bug.as_deref().map(str::parse::<Bug>).transpose()?,
                timings: *timings,
                ..SuiteConfig::default()
            };
            let (suite, _) = run_suite(&cfg, report.command.clone())?;
            report = suite;
        }
        Command::Plot { file, names, out } => {
            let doc = load(file)?;
            let mut plot = Plot::new();
            for name in names {
                add_plot_item(&doc, &mut plot, name)?;
            }
            let svg = plot.render()?;
            std::fs::write(out, &svg).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            report.push(
                "plot",
                true,
                format!("wrote {}", out.display()),
                json!({"items": names, "bytes": svg.len()}),
            );
        }
    }
    Ok(report)
}

fn is_recession(s: &ConvexSet, r: &[Rational]) -> Result<bool> {
    let h = s.hrep()?;
    let zero = Rational::from_integer(0.into());
    Ok(h.ineqs.iter().all(|row| dot(&row.normal, r) <= zero) && h.eqs.iter().all(|row| dot(&row.normal, r) == zero))
}

/// `a..b` or `a..=b`, both inclusive.
pub fn parse_seed_range(s: &str) -> Result<std::ops::RangeInclusive<u64>> {
    let bad = || Error::Input(format!("seed range `{s}` is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn call_args<'a>(name: &'a str, head: &str) -> Option<Vec<&'a str>> {
    let inner = name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').map(str::trim).collect())
}

fn add_plot_item(doc: &InstanceDocument, plot: &mut Plot, name: &str) -> Result<()> {
    if let Some(args) = call_args(name, "normal") {
        let [set, point] = args[..] else {
            return Err(Error::Input(format!("`{name}`: expected normal(SET,POINT)")));
        };
        let (s, x) = (doc.set(set)?, doc.point(point)?);
        let cone: PolyhedralCone = normal_cone(&s, &x)?;
        return plot.add_cone(name, &x, &cone);
    }
    if let Some(args) = call_args(name, "separator") {
        let [a, b] = args[..] else {
            return Err(Error::Input(format!("`{name}`: expected separator(SET1,SET2)")));
        };
        let (s1, s2) = (doc.set(a)?, doc.set(b)?);
        let cert = separate(&s1, &s2)?
            .ok_or_else(|| Error::Precondition(format!("`{a}` and `{b}` cannot be separated")))?;
        let at = cert
            .sup1
            .finite()
            .or(cert.inf2.finite())
            .cloned()
            .ok_or_else(|| Error::Internal("separator without a finite level".into()))?;
        return plot.add_separator(name, &cert.functional, &at);
    }
    if doc.sets.contains_key(name) {
        return plot.add_set(name, &doc.set(name)?);
    }
    if doc.fixtures.contains_key(name) {
        let f = doc.fixture(name)?;
        plot.add_set(&format!("{name}/1"), &f.set1)?;
        return plot.add_set(&format!("{name}/2"), &f.set2);
    }
    Err(Error::UnknownName { kind: "plot object", name: name.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_ranges() {
        assert_eq!(parse_seed_range("1..10").unwrap(), 1..=10);
        assert_eq!(parse_seed_range("3..=3").unwrap(), 3..=3);
        assert!(parse_seed_range("5..1").is_err());
        assert!(parse_seed_range("x").is_err());
    }

    #[test]
    fn call_syntax() {
        assert_eq!(call_args("normal(a, p)", "normal"), Some(vec!["a", "p"]));
        assert_eq!(call_args("normalize", "normal"), None);
    }
}
