//! Normal cone intersection rule and the support function of an
//! intersection, each computed two independent ways.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{cone_sum, cones_equal, normal_cone, PolyhedralCone};
use crate::error::{check_dim, Error, Result};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, VarSign};
use crate::polyhedron::{
    difference_interior_radius, difference_set, intersect, Ball, ConvexSet, Support,
};
use crate::rational::{neg, unit, zeros, Extended, Functional, Point, Rational, Vector};

/// Radii tried for the ball neighborhood in the bounded extremality test.
pub const BALL_RADII: [i64; 7] = [1, 2, 4, 8, 16, 32, 64];

/// Seed of the pseudo-random probe functionals.
pub const PROBE_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcReport {
    /// `Ω1 ∩ int Ω2 ≠ ∅`.
    pub classical_interiority: bool,
    /// `0 ∈ int(Ω1 - Ω2)`.
    pub difference_interiority: bool,
    /// `0 ∈ int(Ω1 - (Ω2 ∩ Ball(x̄, r)))` for the reported `r`.
    pub bounded_extremality: bool,
    pub bounded_radius: Option<Rational>,
    /// `0 ∈ core(Ω1 - Ω2)`.
    pub core_condition: bool,
}

fn require_common(s1: &ConvexSet, s2: &ConvexSet, xbar: &[Rational]) -> Result<()> {
    check_dim(s1.dim(), s2.dim())?;
    check_dim(s1.dim(), xbar.len())?;
    if !s1.contains_point(xbar)? || !s2.contains_point(xbar)? {
        return Err(Error::Precondition("point is not common to both sets".into()));
    }
    Ok(())
}

/// `Ω1 ∩ int Ω2 ≠ ∅`: some point of Ω1 satisfies every row of Ω2 with a
/// positive margin.
pub fn classical_interiority(s1: &ConvexSet, s2: &ConvexSet) -> Result<bool> {
    let (h1, h2) = (s1.hrep()?, s2.hrep()?);
    if !h2.eqs.is_empty() {
        return Ok(false);
    }
    let n = s1.dim();
    let mut objective = zeros(n + 1);
    objective[n] = -Rational::one();
    let mut lp = LinearProgram::new(objective);
    for r in &h2.ineqs {
        let mut row = r.normal.clone();
        row.push(Rational::one());
        lp.ineq(row, r.rhs.clone());
    }
    for r in &h1.ineqs {
        let mut row = r.normal.clone();
        row.push(Rational::zero());
        lp.ineq(row, r.rhs.clone());
    }
    for r in &h1.eqs {
        let mut row = r.normal.clone();
        row.push(Rational::zero());
        lp.equal(row, r.rhs.clone());
    }
    let mut cap = zeros(n + 1);
    cap[n] = Rational::one();
    lp.ineq(cap, Rational::one());
    Ok(match solve_lp(&lp)? {
        LpOutcome::Optimal { value, .. } => value.is_negative(),
        _ => false,
    })
}

/// First radius from [`BALL_RADII`] with `0 ∈ int(Ω1 - (Ω2 ∩ Ball(x̄, r)))`,
/// tested on the lifted system so no Minkowski sum is formed per radius.
pub fn bounded_extremality_radius(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
) -> Result<Option<Rational>> {
    for r in BALL_RADII {
        let r = Rational::from_integer(r.into());
        let ball = Ball::new(xbar.to_vec(), r.clone())?.to_set();
        let local = intersect(s2, &ball)?;
        if difference_interior_radius(s1, &local)?.is_some() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

pub fn qualification_report(s1: &ConvexSet, s2: &ConvexSet, xbar: &[Rational]) -> Result<QcReport> {
    require_common(s1, s2, xbar)?;
    let d = difference_set(s1, s2)?;
    let origin = zeros(s1.dim());
    let radius = bounded_extremality_radius(s1, s2, xbar)?;
    Ok(QcReport {
        classical_interiority: classical_interiority(s1, s2)?,
        difference_interiority: d.interior_contains(&origin)?,
        bounded_extremality: radius.is_some(),
        bounded_radius: radius,
        core_condition: d.contains_point(&origin)? && d.core_contains(&origin)?,
    })
}

/// `int(Ω1 - Ω2) ≠ ∅` and `0 ∈ core(Ω1 - Ω2)`.
pub fn core_interiority_hypotheses(s1: &ConvexSet, s2: &ConvexSet) -> Result<bool> {
    check_dim(s1.dim(), s2.dim())?;
    let d = difference_set(s1, s2)?;
    let origin = zeros(s1.dim());
    Ok(d.interior_point()?.is_some() && d.contains_point(&origin)? && d.core_contains(&origin)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeDecomposition {
    pub probe: Functional,
    pub in_lhs: bool,
    /// `(x1*, x2*)` with `x1* + x2* = probe`, `xi* ∈ N(x̄; Ωi)`.
    pub parts: Option<(Functional, Functional)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionRuleResult {
    pub lhs: PolyhedralCone,
    pub rhs: PolyhedralCone,
    pub equal: bool,
    /// `N(x̄; Ω1) + N(x̄; Ω2) ⊆ N(x̄; Ω1 ∩ Ω2)`, which holds unconditionally.
    pub rhs_in_lhs: bool,
    pub decompositions: Vec<ProbeDecomposition>,
}

impl IntersectionRuleResult {
    /// Every probe in the left side decomposed and the parts verified.
    pub fn decompositions_ok(&self, n1: &PolyhedralCone, n2: &PolyhedralCone) -> Result<bool> {
        for d in &self.decompositions {
            if !d.in_lhs {
                continue;
            }
            let Some((a, b)) = &d.parts else {
                if self.equal {
                    return Ok(false);
                }
                continue;
            };
            let sum_ok = a.iter().zip(b).zip(&d.probe).all(|((x, y), p)| x + y == *p);
            if !sum_ok || !n1.contains(a)? || !n2.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Writes `x*` as `x1* + x2*` with `xi*` in the given cones, if possible.
pub fn decompose_in_sum(
    n1: &PolyhedralCone,
    n2: &PolyhedralCone,
    xstar: &[Rational],
) -> Result<Option<(Functional, Functional)>> {
    check_dim(n1.dim, xstar.len())?;
    let cols: Vec<(&Vector, bool, usize)> = n1
        .generators
        .iter()
        .map(|g| (g, true, 0))
        .chain(n1.lineality.iter().map(|g| (g, false, 0)))
        .chain(n2.generators.iter().map(|g| (g, true, 1)))
        .chain(n2.lineality.iter().map(|g| (g, false, 1)))
        .collect();
    let mut lp = LinearProgram::feasibility(cols.len());
    for i in 0..n1.dim {
        lp.equal(cols.iter().map(|(g, _, _)| g[i].clone()).collect(), xstar[i].clone());
    }
    for (j, (_, nonneg, _)) in cols.iter().enumerate() {
        if *nonneg {
            lp.set_sign(j, VarSign::NonNegative);
        }
    }
    let LpOutcome::Optimal { point, .. } = solve_lp(&lp)? else {
        return Ok(None);
    };
    let mut parts = (zeros(n1.dim), zeros(n1.dim));
    for ((g, _, side), w) in cols.iter().zip(&point) {
        let target = if *side == 0 { &mut parts.0 } else { &mut parts.1 };
        for (t, x) in target.iter_mut().zip(g.iter()) {
            *t += w * x;
        }
    }
    Ok(Some(parts))
}

/// Compares `N(x̄; Ω1 ∩ Ω2)` with `N(x̄; Ω1) + N(x̄; Ω2)` and decomposes
/// each probe lying in the left side.
pub fn intersection_rule(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
    probes: &[Functional],
) -> Result<IntersectionRuleResult> {
    require_common(s1, s2, xbar)?;
    let lhs = normal_cone(&intersect(s1, s2)?, xbar)?;
    let n1 = normal_cone(s1, xbar)?;
    let n2 = normal_cone(s2, xbar)?;
    let rhs = cone_sum(&n1, &n2)?;
    let equal = cones_equal(&lhs, &rhs)?;
    let rhs_in_lhs = lhs.contains_cone(&rhs)?;
    let mut decompositions = Vec::with_capacity(probes.len());
    for p in probes {
        check_dim(s1.dim(), p.len())?;
        let in_lhs = lhs.contains(p)?;
        let parts = if in_lhs { decompose_in_sum(&n1, &n2, p)? } else { None };
        decompositions.push(ProbeDecomposition {
            probe: p.clone(),
            in_lhs,
            parts,
        });
    }
    Ok(IntersectionRuleResult {
        lhs,
        rhs,
        equal,
        rhs_in_lhs,
        decompositions,
    })
}

/// `±e_i` followed by 16 fixed pseudo-random rational directions.
pub fn default_probes(dim: usize) -> Vec<Functional> {
    let mut out = Vec::new();
    for i in 0..dim {
        let e = unit(dim, i);
        out.push(neg(&e));
        out.push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED ^ dim as u64);
    for _ in 0..16 {
        out.push(
            (0..dim)
                .map(|_| Rational::new(rng.gen_range(-8i64..=8).into(), rng.gen_range(1i64..=8).into()))
                .collect(),
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportValue {
    pub value: Extended,
    pub maximizer: Option<Point>,
    /// Recession direction with `⟨x*, r⟩ > 0` when the value is `+∞`.
    pub ray: Option<Vector>,
}

/// `σ_Ω(x*) = sup{⟨x*, x⟩ : x ∈ Ω}` by LP.
pub fn support_value(s: &ConvexSet, xstar: &[Rational]) -> Result<SupportValue> {
    match s.maximize(xstar)? {
        Support::Attained { value, point } => Ok(SupportValue {
            value: Extended::Finite(value),
            maximizer: Some(point),
            ray: None,
        }),
        Support::Unbounded { ray, .. } => Ok(SupportValue {
            value: Extended::PosInfinity,
            maximizer: None,
            ray: Some(ray),
        }),
        Support::Empty => Err(Error::Precondition("support function of an empty set".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfConvolution {
    pub value: Extended,
    pub witnesses: Option<(Functional, Functional)>,
}

/// `(σ_{Ω1} ⊕ σ_{Ω2})(x*)` as one LP over row multipliers:
/// minimize `b1·y1 + f1·z1 + b2·y2 + f2·z2` subject to
/// `A1ᵀy1 + E1ᵀz1 + A2ᵀy2 + E2ᵀz2 = x*`, `y >= 0`.
pub fn inf_convolution_support(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xstar: &[Rational],
) -> Result<InfConvolution> {
    check_dim(s1.dim(), s2.dim())?;
    check_dim(s1.dim(), xstar.len())?;
    let (h1, h2) = (s1.hrep()?, s2.hrep()?);
    // columns: (normal, rhs, nonneg, side)
    let cols: Vec<(&Vector, &Rational, bool, usize)> = h1
        .ineqs
        .iter()
        .map(|r| (&r.normal, &r.rhs, true, 0))
        .chain(h1.eqs.iter().map(|r| (&r.normal, &r.rhs, false, 0)))
        .chain(h2.ineqs.iter().map(|r| (&r.normal, &r.rhs, true, 1)))
        .chain(h2.eqs.iter().map(|r| (&r.normal, &r.rhs, false, 1)))
        .collect();
    let mut lp = LinearProgram::new(cols.iter().map(|c| c.1.clone()).collect());
    for (i, x) in xstar.iter().enumerate() {
        lp.equal(cols.iter().map(|c| c.0[i].clone()).collect(), x.clone());
    }
    for (j, c) in cols.iter().enumerate() {
        if c.2 {
            lp.set_sign(j, VarSign::NonNegative);
        }
    }
    Ok(match solve_lp(&lp)? {
        LpOutcome::Optimal { point, value, .. } => {
            let mut parts = (zeros(s1.dim()), zeros(s1.dim()));
            for (c, w) in cols.iter().zip(&point) {
                let target = if c.3 == 0 { &mut parts.0 } else { &mut parts.1 };
                for (t, x) in target.iter_mut().zip(c.0.iter()) {
                    *t += w * x;
                }
            }
            InfConvolution {
                value: Extended::Finite(value),
                witnesses: Some(parts),
            }
        }
        LpOutcome::Infeasible { .. } => InfConvolution {
            value: Extended::PosInfinity,
            witnesses: None,
        },
        LpOutcome::Unbounded { .. } => InfConvolution {
            value: Extended::NegInfinity,
            witnesses: None,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportIntersectionVerdict {
    pub intersection_nonempty: bool,
    pub one_bounded: bool,
    pub difference_interiority: bool,
    pub hypotheses_met: bool,
    /// `σ_{Ω1 ∩ Ω2}(x*)`.
    pub lhs: Extended,
    /// `(σ_{Ω1} ⊕ σ_{Ω2})(x*)`.
    pub rhs: Extended,
    pub equal: bool,
    /// `lhs <= rhs`, valid without hypotheses.
    pub inequality_holds: bool,
    pub witnesses: Option<(Functional, Functional)>,
    /// `σ_{Ω1}(x1*) + σ_{Ω2}(x2*)` recomputed from the witnesses.
    pub witness_value: Option<Extended>,
}

impl SupportIntersectionVerdict {
    /// Under the hypotheses: equality, plus attainment by the witnesses
    /// whenever the common value is finite. Always: the inequality.
    pub fn holds(&self) -> bool {
        if !self.inequality_holds {
            return false;
        }
        if !self.hypotheses_met {
            return true;
        }
        match &self.lhs {
            Extended::Finite(_) => self.equal && self.witness_value.as_ref() == Some(&self.lhs),
            _ => self.equal,
        }
    }
}

fn add_extended(a: &Extended, b: &Extended) -> Extended {
    match (a, b) {
        (Extended::Finite(x), Extended::Finite(y)) => Extended::Finite(x + y),
        (Extended::PosInfinity, _) | (_, Extended::PosInfinity) => Extended::PosInfinity,
        _ => Extended::NegInfinity,
    }
}

/// Hypotheses of the support-of-intersection identity for a fixed pair,
/// computed once and reused across functionals.
#[derive(Clone, Debug)]
pub struct SupportIntersection<'a> {
    s1: &'a ConvexSet,
    s2: &'a ConvexSet,
    meet: ConvexSet,
    pub intersection_nonempty: bool,
    pub one_bounded: bool,
    pub difference_interiority: bool,
}

impl<'a> SupportIntersection<'a> {
    pub fn prepare(s1: &'a ConvexSet, s2: &'a ConvexSet) -> Result<Self> {
        check_dim(s1.dim(), s2.dim())?;
        let meet = intersect(s1, s2)?;
        Ok(SupportIntersection {
            intersection_nonempty: !meet.is_empty()?,
            one_bounded: s1.is_bounded()? || s2.is_bounded()?,
            difference_interiority: difference_set(s1, s2)?.interior_contains(&zeros(s1.dim()))?,
            s1,
            s2,
            meet,
        })
    }

    pub fn hypotheses_met(&self) -> bool {
        self.intersection_nonempty && self.one_bounded && self.difference_interiority
    }

    pub fn intersection(&self) -> &ConvexSet {
        &self.meet
    }

    pub fn evaluate(&self, xstar: &[Rational]) -> Result<SupportIntersectionVerdict> {
        let lhs = if self.intersection_nonempty {
            support_value(&self.meet, xstar)?.value
        } else {
            Extended::NegInfinity
        };
        let conv = inf_convolution_support(self.s1, self.s2, xstar)?;
        let witness_value = match &conv.witnesses {
            Some((a, b)) => Some(add_extended(
                &support_value(self.s1, a)?.value,
                &support_value(self.s2, b)?.value,
            )),
            None => None,
        };
        Ok(SupportIntersectionVerdict {
            intersection_nonempty: self.intersection_nonempty,
            one_bounded: self.one_bounded,
            difference_interiority: self.difference_interiority,
            hypotheses_met: self.hypotheses_met(),
            equal: lhs == conv.value,
            inequality_holds: lhs <= conv.value,
            lhs,
            rhs: conv.value,
            witnesses: conv.witnesses,
            witness_value,
        })
    }
}

/// Both sides of `σ_{Ω1 ∩ Ω2} = σ_{Ω1} ⊕ σ_{Ω2}` at `x*`, with hypotheses
/// (nonempty intersection, one bounded set, `0 ∈ int(Ω1 - Ω2)`) checked.
pub fn support_intersection_theorem(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xstar: &[Rational],
) -> Result<SupportIntersectionVerdict> {
    SupportIntersection::prepare(s1, s2)?.evaluate(xstar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{HRep, Row};
    use crate::rational::{int, rat, vec_of};

    fn boxed(lo: &[Rational], hi: &[Rational]) -> ConvexSet {
        ConvexSet::boxed(lo, hi).unwrap()
    }

    fn remark_pair() -> (ConvexSet, ConvexSet) {
        let o1 = ConvexSet::from_ineqs(2, vec![(vec_of(&[0, -1]), int(0))]).unwrap();
        let o2 = ConvexSet::from_hrep(
            HRep::new(2, vec![], vec![Row::new(vec_of(&[1, 0]), int(0))]).unwrap(),
        );
        (o1, o2)
    }

    #[test]
    fn remark_pair_qualification() {
        let (a, b) = remark_pair();
        let q = qualification_report(&a, &b, &vec_of(&[0, 0])).unwrap();
        assert!(!q.classical_interiority);
        assert!(q.difference_interiority);
        assert!(q.bounded_extremality);
        assert!(q.core_condition);
        assert!(core_interiority_hypotheses(&a, &b).unwrap());
        let r = intersection_rule(&a, &b, &vec_of(&[0, 0]), &default_probes(2)).unwrap();
        assert!(r.equal && r.rhs_in_lhs);
        assert_eq!(r.lhs.generators, vec![vec_of(&[0, -1])]);
        assert_eq!(r.lhs.lineality, vec![vec_of(&[1, 0])]);
    }

    #[test]
    fn overlapping_boxes_all_conditions() {
        let a = boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1]));
        let b = boxed(&[rat(1, 2), int(0)], &[rat(3, 2), int(1)]);
        let q = qualification_report(&a, &b, &[rat(3, 4), rat(1, 2)]).unwrap();
        assert!(q.classical_interiority && q.difference_interiority);
        assert!(q.bounded_extremality && q.core_condition);
        let v = support_intersection_theorem(&a, &b, &vec_of(&[1, 1])).unwrap();
        assert!(v.hypotheses_met && v.holds());
        assert_eq!(v.lhs, Extended::Finite(int(2)));
    }

    #[test]
    fn corner_touching_boxes_fail_every_condition() {
        let a = boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1]));
        let b = boxed(&vec_of(&[1, 1]), &vec_of(&[2, 2]));
        let q = qualification_report(&a, &b, &vec_of(&[1, 1])).unwrap();
        assert!(!q.classical_interiority && !q.difference_interiority);
        assert!(!q.bounded_extremality && !q.core_condition);
        assert!(!core_interiority_hypotheses(&a, &b).unwrap());
    }

    #[test]
    fn facet_touching_inf_convolution() {
        let a = boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1]));
        let b = boxed(&vec_of(&[1, 0]), &vec_of(&[2, 1]));
        let c = inf_convolution_support(&a, &b, &vec_of(&[0, 1])).unwrap();
        assert_eq!(c.value, Extended::Finite(int(1)));
        let (x1, x2) = c.witnesses.unwrap();
        assert_eq!(crate::rational::add(&x1, &x2), vec_of(&[0, 1]));
        let zero = inf_convolution_support(&a, &b, &vec_of(&[0, 0])).unwrap();
        assert_eq!(zero.value, Extended::Finite(int(0)));
    }

    #[test]
    fn support_values() {
        let a = boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1]));
        assert_eq!(support_value(&a, &vec_of(&[1, 1])).unwrap().value, Extended::Finite(int(2)));
        assert_eq!(support_value(&a, &vec_of(&[-1, -1])).unwrap().value, Extended::Finite(int(0)));
        let (o1, _) = remark_pair();
        let s = support_value(&o1, &vec_of(&[1, 0])).unwrap();
        assert_eq!(s.value, Extended::PosInfinity);
        assert!(crate::rational::dot(&vec_of(&[1, 0]), &s.ray.unwrap()).is_positive());
    }

    #[test]
    fn probes_are_deterministic() {
        assert_eq!(default_probes(3), default_probes(3));
        assert_eq!(default_probes(2).len(), 20);
    }
}
