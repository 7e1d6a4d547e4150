//! The verification suite: every invariant sweep over the generated corpus
//! and the fixtures, tallied per sweep into a [`Report`].

use std::ops::RangeInclusive;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::calculus::{
    classical_interiority, default_probes, intersection_rule, core_interiority_hypotheses,
    qualification_report, SupportIntersection,
};
use crate::cone::{cone_sum, cones_equal, normal_cone, PolyhedralCone};
use crate::error::{Error, Result};
use crate::extremality::{
    approximate_extremal_principle, check_extremal, check_sufficient_interiority, separate,
    support_point_near, translate_separates,
};
use crate::format::{fixtures_dir, load_fixtures};
use crate::lp::{solve_lp, verify_certificate, LinearProgram, LpOutcome, VarSign};
use crate::oracle::{
    corpus, definition_normal_cone_oracle, epigraph_decomposition, grid_check_difference,
    linf_depth, random_boundary_point, random_lp, random_polytope, vertex_support_oracle,
    GridCheck, GridSpec, Instance,
};
use crate::polyhedron::{difference_set, Ball, ConvexSet, Support};
use crate::rational::{dot, neg, norm_inf, rat, zeros, Extended, Rational, Vector};
use crate::report::Report;

/// Deliberate defects for checking that the suite notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bug {
    /// The cone sum forgets the second summand.
    ConeSum,
}

impl std::str::FromStr for Bug {
    type Err = Error;
    fn from_str(s: &str) -> Result<Bug> {
        match s {
            "cone-sum" => Ok(Bug::ConeSum),
            other => Err(Error::Input(format!("unknown bug `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seeds: RangeInclusive<u64>,
    pub dims: Vec<usize>,
    /// Worker threads; 1 runs inline.
    pub parallel: usize,
    pub include_fixtures: bool,
    pub lp_count: u64,
    pub boundary_points: u64,
    pub grid_resolution: usize,
    pub epsilons: Vec<Rational>,
    pub inject: Option<Bug>,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seeds: 1..=200,
            dims: vec![2, 3, 4],
            parallel: 1,
            include_fixtures: true,
            lp_count: 1000,
            boundary_points: 100,
            grid_resolution: 401,
            epsilons: vec![rat(1, 1), rat(1, 2), rat(1, 10), rat(1, 100)],
            inject: None,
            timings: false,
        }
    }
}

/// Sweep names in report order.
pub const SWEEPS: [&str; 11] = [
    "extremality-criterion",
    "grid-oracle",
    "separation-chain",
    "approximate-extremal-principle",
    "intersection-rule",
    "rule-inclusion",
    "qualification-conditions",
    "support-intersection",
    "sufficient-interiority",
    "support-points",
    "lp-certificates",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }
}

/// Per-sweep tallies, indexed like [`SWEEPS`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tallies(pub Vec<Tally>);

impl Tallies {
    fn new() -> Self {
        Tallies(vec![Tally::default(); SWEEPS.len()])
    }

    fn get(&mut self, name: &str) -> &mut Tally {
        let i = SWEEPS.iter().position(|s| *s == name).expect("known sweep");
        &mut self.0[i]
    }

    fn merge(&mut self, other: Tallies) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.merge(b);
        }
    }

    pub fn sweep(&self, name: &str) -> &Tally {
        let i = SWEEPS.iter().position(|s| *s == name).expect("known sweep");
        &self.0[i]
    }
}

/// Corpus instances followed by the fixtures.
pub fn instances(cfg: &SuiteConfig) -> Result<Vec<Instance>> {
    let mut out = corpus(cfg.seeds.clone(), &cfg.dims)?;
    if cfg.include_fixtures {
        for f in load_fixtures(&fixtures_dir())? {
            out.push(Instance {
                name: format!("fixture-{}", f.name),
                set1: f.set1,
                set2: f.set2,
                point: f.point,
            });
        }
    }
    Ok(out)
}

fn run_parallel<T, F>(parallel: usize, items: &[T], f: F) -> Result<Vec<Tallies>>
where
    T: Sync,
    F: Fn(&T) -> Result<Tallies> + Sync + Send,
{
    if parallel <= 1 {
        return items.iter().map(&f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallel)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    // collect keeps input order, so the merge below is deterministic
    pool.install(|| items.par_iter().map(&f).collect())
}

/// Runs the full suite and builds its report.
pub fn run_suite(cfg: &SuiteConfig, command: Vec<String>) -> Result<(Report, Tallies)> {
    let mut report = Report::new(command);
    let mut tallies = Tallies::new();

    let start = Instant::now();
    let insts = instances(cfg)?;
    for t in run_parallel(cfg.parallel, &insts, |inst| check_instance(inst, cfg))? {
        tallies.merge(t);
    }
    if cfg.timings {
        report.record_timing("instances", start.elapsed().as_secs_f64());
    }

    let start = Instant::now();
    let seeds: Vec<u64> = (1..=cfg.boundary_points).collect();
    for t in run_parallel(cfg.parallel, &seeds, |s| check_support_point(*s, &cfg.dims))? {
        tallies.merge(t);
    }
    let seeds: Vec<u64> = (1..=cfg.lp_count).collect();
    for t in run_parallel(cfg.parallel, &seeds, |s| check_lp(*s))? {
        tallies.merge(t);
    }
    if cfg.timings {
        report.record_timing("global-sweeps", start.elapsed().as_secs_f64());
    }

    for (name, t) in SWEEPS.iter().zip(&tallies.0) {
        let passed = t.failures.is_empty();
        let summary = format!(
            "{} checked, {} skipped, {} failed",
            t.checked,
            t.skipped,
            t.failures.len()
        );
        let shown: Vec<&String> = t.failures.iter().take(20).collect();
        report.push(
            name,
            passed,
            summary,
            json!({"checked": t.checked, "skipped": t.skipped, "failures": shown}),
        );
    }
    Ok((report, tallies))
}

fn tag(inst: &Instance, what: &str) -> String {
    format!("{}: {what}", inst.name)
}

fn ball_inside(d: &ConvexSet, r: &Rational) -> Result<bool> {
    let ball = Ball::new(zeros(d.dim()), r.clone())?.to_set();
    d.contains_set(&ball)
}

fn row_valid_on(d: &ConvexSet, normal: &[Rational], rhs: &Rational) -> Result<bool> {
    Ok(match d.maximize(normal)? {
        Support::Attained { value, .. } => value <= *rhs,
        Support::Unbounded { .. } => false,
        Support::Empty => true,
    })
}

fn cone_sound(s: &ConvexSet, xbar: &[Rational], c: &PolyhedralCone) -> Result<bool> {
    for g in &c.generators {
        if !definition_normal_cone_oracle(s, xbar, g)? {
            return Ok(false);
        }
    }
    for l in &c.lineality {
        if !definition_normal_cone_oracle(s, xbar, l)? || !definition_normal_cone_oracle(s, xbar, &neg(l))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All per-instance checks. Errors from the library count as failures of
/// the sweep being evaluated, never abort the run.
pub fn check_instance(inst: &Instance, cfg: &SuiteConfig) -> Result<Tallies> {
    let mut t = Tallies::new();
    if let Err(e) = check_instance_inner(inst, cfg, &mut t) {
        t.get("extremality-criterion")
            .failures
            .push(tag(inst, &format!("error: {e}")));
    }
    Ok(t)
}

fn check_instance_inner(inst: &Instance, cfg: &SuiteConfig, t: &mut Tallies) -> Result<()> {
    let (s1, s2) = (&inst.set1, &inst.set2);
    let n = s1.dim();
    let origin = zeros(n);
    let half = rat(1, 2);

    // extremality verdict against the difference set, with its certificate
    let verdict = check_extremal(s1, s2, Some(&half))?;
    let d = difference_set(s1, s2)?;
    let interior = d.interior_contains(&origin)?;
    let crit = t.get("extremality-criterion");
    crit.check(verdict.extremal == !interior, || tag(inst, "verdict differs from interior test"));
    if verdict.extremal {
        let a = verdict.perturbation.clone().unwrap_or_default();
        let ok = norm_inf(&a) <= half && translate_separates(s1, s2, &a)?;
        crit.check(ok, || tag(inst, "perturbation not verified"));
        let row = verdict.boundary_evidence.clone();
        let ok = match &row {
            Some(r) => !r.rhs.is_positive() && row_valid_on(&d, &r.normal, &r.rhs)?,
            None => false,
        };
        crit.check(ok, || tag(inst, "boundary evidence invalid"));
        let ok = !classical_interiority(s1, s2)? && !classical_interiority(s2, s1)?;
        crit.check(ok, || tag(inst, "interior of one set meets the other"));
    } else {
        let ok = match &verdict.interior_ball_radius {
            Some(r) => r.is_positive() && ball_inside(&d, r)?,
            None => false,
        };
        crit.check(ok, || tag(inst, "interior ball not inside difference"));
    }

    if n == 2 {
        let g = GridSpec::new(2, Rational::one(), cfg.grid_resolution)?;
        let depth = linf_depth(d.hrep()?, &origin);
        let grid = t.get("grid-oracle");
        match grid_check_difference(s1, s2, &g, depth.as_ref(), !verdict.extremal)? {
            GridCheck::Agree => grid.check(true, String::new),
            GridCheck::Disagree => grid.check(false, || tag(inst, "grid oracle disagrees")),
            GridCheck::Skipped => grid.skipped += 1,
        }
    }

    // separation and the exact extremal principle
    let sep = separate(s1, s2)?;
    let chain = t.get("separation-chain");
    chain.check(sep.is_some() == verdict.extremal, || tag(inst, "separation differs from extremality"));
    if let Some(c) = &sep {
        chain.check(c.verify(s1, s2)?, || tag(inst, "separation certificate fails"));
    }
    if let Some(p) = &inst.point {
        let n1 = normal_cone(s1, p)?;
        let n2 = normal_cone(s2, p)?;
        let (holds, witness) = crate::cone::ep_condition(s1, s2, p)?;
        chain.check(holds == verdict.extremal, || tag(inst, "common normal differs from extremality"));
        if let Some(w) = witness {
            let ok = w.iter().any(|x| !x.is_zero()) && n1.contains(&w)? && n2.contains(&neg(&w))?;
            chain.check(ok, || tag(inst, "common normal witness invalid"));
        }

        if verdict.extremal {
            let ep = t.get("approximate-extremal-principle");
            for eps in &cfg.epsilons {
                let ok = match approximate_extremal_principle(s1, s2, p, eps) {
                    Ok(c) => c.verify(s1, s2, p)?,
                    Err(_) => false,
                };
                ep.check(ok, || tag(inst, &format!("certificate fails at epsilon {eps}")));
            }
        }

        check_rule(inst, cfg, p, &n1, &n2, t)?;
    }

    // qualification conditions
    let qc = t.get("qualification-conditions");
    let d_has_interior = d.interior_point()?.is_some();
    if d_has_interior {
        let core = d.contains_point(&origin)? && d.core_contains(&origin)?;
        qc.check(core == interior, || tag(inst, "core and interior of difference disagree"));
    }
    if let Some(p) = &inst.point {
        for s in [s1, s2] {
            qc.check(s.core_contains(p)? == s.interior_contains(p)?, || {
                tag(inst, "core and interior of a set disagree")
            });
        }
    }

    // support function of the intersection
    let ctx = SupportIntersection::prepare(s1, s2)?;
    let meet_bounded = ctx.intersection_nonempty && ctx.intersection().is_bounded()?;
    let sup = t.get("support-intersection");
    for probe in default_probes(n) {
        let v = ctx.evaluate(&probe)?;
        sup.check(v.holds(), || tag(inst, &format!("support identity fails at {probe:?}")));
        if meet_bounded {
            let oracle = vertex_support_oracle(ctx.intersection(), &probe)?;
            sup.check(v.lhs == Extended::Finite(oracle), || tag(inst, "vertex oracle disagrees"));
        }
    }

    let suff = t.get("sufficient-interiority");
    if check_sufficient_interiority(s1, s2)? {
        suff.check(verdict.extremal && d_has_interior, || tag(inst, "sufficient interiority without extremality"));
    } else {
        suff.skipped += 1;
    }
    Ok(())
}

fn buggy_cone_sum(a: &PolyhedralCone, _b: &PolyhedralCone) -> Result<PolyhedralCone> {
    PolyhedralCone::new(a.dim, a.generators.clone(), a.lineality.clone())
}

fn check_rule(
    inst: &Instance,
    cfg: &SuiteConfig,
    p: &[Rational],
    n1: &PolyhedralCone,
    n2: &PolyhedralCone,
    t: &mut Tallies,
) -> Result<()> {
    let (s1, s2) = (&inst.set1, &inst.set2);
    let report = qualification_report(s1, s2, p)?;
    let rule = intersection_rule(s1, s2, p, &default_probes(s1.dim()))?;
    let rhs = match cfg.inject {
        Some(Bug::ConeSum) => buggy_cone_sum(n1, n2)?,
        None => cone_sum(n1, n2)?,
    };
    let equal = cones_equal(&rule.lhs, &rhs)?;

    let inc = t.get("rule-inclusion");
    inc.check(rule.lhs.contains_cone(&rule.rhs)?, || tag(inst, "sum of normal cones not inside"));
    let sound = cone_sound(s1, p, n1)? && cone_sound(s2, p, n2)?
        && cone_sound(&crate::polyhedron::intersect(s1, s2)?, p, &rule.lhs)?;
    inc.check(sound, || tag(inst, "normal cone generator fails the definition"));

    let qc = t.get("qualification-conditions");
    if report.classical_interiority {
        qc.check(report.bounded_extremality, || tag(inst, "classical condition without bounded extremality"));
    }
    if core_interiority_hypotheses(s1, s2)? {
        qc.check(report.bounded_extremality, || tag(inst, "core hypotheses without bounded extremality"));
    }

    let r = t.get("intersection-rule");
    if !report.bounded_extremality {
        r.skipped += 1;
        return Ok(());
    }
    r.check(equal, || tag(inst, "normal cone intersection rule fails"));
    r.check(rule.decompositions_ok(n1, n2)?, || tag(inst, "probe decomposition fails"));
    if s1.dim() == 2 {
        if let (Some(x), Some(radius)) = (rule.lhs.generators.first(), &report.bounded_radius) {
            let ok = match epigraph_decomposition(s1, s2, p, x, radius)? {
                Some((u, v)) => n1.contains(&u)? && n2.contains(&v)?,
                None => false,
            };
            r.check(ok, || tag(inst, "epigraphical decomposition fails"));
        }
    }
    Ok(())
}

/// One random polytope and boundary point per seed.
pub fn check_support_point(seed: u64, dims: &[usize]) -> Result<Tallies> {
    let mut t = Tallies::new();
    let dim = dims[(seed as usize) % dims.len()];
    let name = format!("polytope-{seed}-dim-{dim}");
    let outcome = (|| -> Result<bool> {
        let s = random_polytope(seed, dim)?;
        let x = random_boundary_point(&s, seed)?;
        let eps = rat(1, 10);
        let sp = support_point_near(&s, &x, &eps)?;
        Ok(sp.point == x && sp.verify(&s, &x, &eps)?)
    })();
    let ok = matches!(outcome, Ok(true));
    t.get("support-points").check(ok, || format!("{name}: {outcome:?}"));
    Ok(t)
}

/// Mutations of a certificate that must each fail verification.
pub fn certificate_mutations(lp: &LinearProgram, out: &LpOutcome) -> Vec<(&'static str, LpOutcome)> {
    let mut muts = Vec::new();
    match out {
        LpOutcome::Optimal { point, value, dual } => {
            muts.push((
                "value",
                LpOutcome::Optimal {
                    point: point.clone(),
                    value: value + Rational::one(),
                    dual: dual.clone(),
                },
            ));
            if let Some(moved) = move_past_row(lp, point) {
                muts.push((
                    "point-infeasible",
                    LpOutcome::Optimal {
                        point: moved,
                        value: value.clone(),
                        dual: dual.clone(),
                    },
                ));
            }
            if let Some(j) = lp.objective.iter().position(|c| !c.is_zero()) {
                let mut x = point.clone();
                x[j] += Rational::one();
                muts.push((
                    "point-objective",
                    LpOutcome::Optimal {
                        point: x,
                        value: value.clone(),
                        dual: dual.clone(),
                    },
                ));
            }
            if !lp.ineq_lhs.is_empty() {
                let mut y = dual.clone();
                y[0] = -Rational::one();
                muts.push((
                    "dual-sign",
                    LpOutcome::Optimal {
                        point: point.clone(),
                        value: value.clone(),
                        dual: y,
                    },
                ));
            }
        }
        LpOutcome::Infeasible { farkas } => {
            muts.push((
                "farkas-zero",
                LpOutcome::Infeasible {
                    farkas: vec![Rational::zero(); farkas.len()],
                },
            ));
            if !lp.ineq_lhs.is_empty() {
                let mut y = farkas.clone();
                y[0] = -Rational::one();
                muts.push(("farkas-sign", LpOutcome::Infeasible { farkas: y }));
            }
        }
        LpOutcome::Unbounded { point, ray } => {
            muts.push((
                "ray-zero",
                LpOutcome::Unbounded {
                    point: point.clone(),
                    ray: vec![Rational::zero(); ray.len()],
                },
            ));
            muts.push((
                "ray-negated",
                LpOutcome::Unbounded {
                    point: point.clone(),
                    ray: neg(ray),
                },
            ));
        }
    }
    muts
}

/// `x'` with `a·x' = b + 1` on the first nonzero row (or a sign violation
/// when there is none).
fn move_past_row(lp: &LinearProgram, x: &[Rational]) -> Option<Vector> {
    let rows = lp.ineq_lhs.iter().zip(&lp.ineq_rhs).chain(lp.eq_lhs.iter().zip(&lp.eq_rhs));
    for (a, b) in rows {
        let aa = dot(a, a);
        if aa.is_zero() {
            continue;
        }
        let step = (b + Rational::one() - dot(a, x)) / aa;
        return Some(x.iter().zip(a).map(|(xi, ai)| xi + &step * ai).collect());
    }
    let j = (0..lp.num_vars()).find(|&j| lp.sign(j) == VarSign::NonNegative)?;
    let mut y = x.to_vec();
    y[j] = -Rational::one();
    Some(y)
}

/// Solves one random LP, verifies its certificate, cross-checks a row
/// permutation, and checks that every mutation is rejected.
pub fn check_lp(seed: u64) -> Result<Tallies> {
    let mut t = Tallies::new();
    let lp = random_lp(seed);
    let name = format!("lp-{seed}");
    let tl = t.get("lp-certificates");
    let out = solve_lp(&lp)?;
    tl.check(verify_certificate(&lp, &out), || format!("{name}: certificate rejected"));

    let mut perm = lp.clone();
    perm.ineq_lhs.reverse();
    perm.ineq_rhs.reverse();
    perm.eq_lhs.reverse();
    perm.eq_rhs.reverse();
    let pout = solve_lp(&perm)?;
    let same = std::mem::discriminant(&out) == std::mem::discriminant(&pout) && out.value() == pout.value();
    tl.check(same && verify_certificate(&perm, &pout), || format!("{name}: permuted rows disagree"));

    for (what, m) in certificate_mutations(&lp, &out) {
        tl.check(!verify_certificate(&lp, &m), || format!("{name}: mutation {what} accepted"));
    }
    Ok(t)
}
