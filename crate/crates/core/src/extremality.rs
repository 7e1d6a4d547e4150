//! Extremal systems of two polyhedra, separation, and the extremal principle
//! in exact arithmetic. Every positive answer carries a witness that is
//! re-checked before it is returned.

use num_traits::{One, Signed, Zero};

use crate::cone::{dual_distance, ep_condition, normal_cone};
use crate::error::{check_dim, Error, Result};
use crate::lp::{solve_lp, LinearProgram, LpOutcome};
use crate::polyhedron::{difference_set, intersect, ConvexSet, Row, Support};
use crate::rational::{
    dot, neg, norm_inf, norm_l1, normalize_first, scale, zeros, Extended, Functional, Point,
    Rational, Vector,
};

/// Largest number of halvings tried by [`find_perturbation`].
pub const MAX_HALVINGS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalityVerdict {
    pub extremal: bool,
    /// Translation `a` of the first set for the requested ε, when extremal.
    pub perturbation: Option<Vector>,
    /// A row `g·x <= β` valid on `Ω1 - Ω2` with `β <= 0`, when extremal.
    pub boundary_evidence: Option<Row>,
    /// ℓ∞ radius `r` with `Ball(0, r) ⊆ Ω1 - Ω2`, when not extremal.
    pub interior_ball_radius: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub functional: Functional,
    pub sup1: Extended,
    pub inf2: Extended,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxEpCertificate {
    pub epsilon: Rational,
    pub perturbation: Vector,
    pub x1: Point,
    pub x2: Point,
    pub xstar1: Functional,
    pub xstar2: Functional,
}

fn require_nonempty(s1: &ConvexSet, s2: &ConvexSet) -> Result<()> {
    check_dim(s1.dim(), s2.dim())?;
    if s1.is_empty()? || s2.is_empty()? {
        return Err(Error::Precondition("extremality needs two nonempty sets".into()));
    }
    Ok(())
}

fn require_common(s1: &ConvexSet, s2: &ConvexSet, xbar: &[Rational]) -> Result<()> {
    check_dim(s1.dim(), xbar.len())?;
    if !s1.contains_point(xbar)? || !s2.contains_point(xbar)? {
        return Err(Error::Precondition("point is not common to both sets".into()));
    }
    Ok(())
}

/// A row of `D` that keeps 0 out of its interior, chosen with the smallest
/// `β / ‖g‖₁`. Equalities are oriented so that `β <= 0`.
fn boundary_row(d: &ConvexSet) -> Result<Option<Row>> {
    let h = d.hrep()?;
    if let Some(e) = h.eqs.first() {
        return Ok(Some(if e.rhs.is_positive() {
            Row::new(neg(&e.normal), -e.rhs.clone())
        } else {
            e.clone()
        }));
    }
    let mut best: Option<(Rational, &Row)> = None;
    for r in &h.ineqs {
        if r.rhs.is_positive() {
            continue;
        }
        let depth = &r.rhs / norm_l1(&r.normal);
        if best.as_ref().is_none_or(|(b, _)| depth < *b) {
            best = Some((depth, r));
        }
    }
    Ok(best.map(|(_, r)| r.clone()))
}

fn interior_radius(d: &ConvexSet) -> Result<Rational> {
    let h = d.hrep()?;
    let mut r = Rational::one();
    for row in &h.ineqs {
        let q = &row.rhs / norm_l1(&row.normal);
        if q < r {
            r = q;
        }
    }
    Ok(r)
}

/// Decides extremality through `0 ∉ int(Ω1 - Ω2)` and, when an ε is given
/// and the pair is extremal, attaches a verified perturbation.
pub fn check_extremal(
    s1: &ConvexSet,
    s2: &ConvexSet,
    epsilon: Option<&Rational>,
) -> Result<ExtremalityVerdict> {
    require_nonempty(s1, s2)?;
    let d = difference_set(s1, s2)?;
    let origin = zeros(s1.dim());
    if d.interior_contains(&origin)? {
        return Ok(ExtremalityVerdict {
            extremal: false,
            perturbation: None,
            boundary_evidence: None,
            interior_ball_radius: Some(interior_radius(&d)?),
        });
    }
    let row = boundary_row(&d)?
        .ok_or_else(|| Error::Internal("no boundary row for a non-interior origin".into()))?;
    let perturbation = match epsilon {
        Some(eps) => Some(perturb_along(s1, s2, &row.normal, eps)?),
        None => None,
    };
    Ok(ExtremalityVerdict {
        extremal: true,
        perturbation,
        boundary_evidence: Some(row),
        interior_ball_radius: None,
    })
}

pub fn is_extremal_system(s1: &ConvexSet, s2: &ConvexSet) -> Result<ExtremalityVerdict> {
    check_extremal(s1, s2, None)
}

/// `(Ω1 + a) ∩ Ω2 = ∅`, decided by an emptiness LP.
pub fn translate_separates(s1: &ConvexSet, s2: &ConvexSet, a: &[Rational]) -> Result<bool> {
    intersect(&s1.translate(a)?, s2)?.is_empty()
}

fn perturb_along(s1: &ConvexSet, s2: &ConvexSet, g: &[Rational], eps: &Rational) -> Result<Vector> {
    if !eps.is_positive() {
        return Err(Error::Input("epsilon must be positive".into()));
    }
    let mut a = scale(g, &(-eps / norm_inf(g)));
    for _ in 0..MAX_HALVINGS {
        if translate_separates(s1, s2, &a)? {
            return Ok(a);
        }
        a = scale(&a, &Rational::new(1.into(), 2.into()));
    }
    Err(Error::Internal(format!(
        "no separating translation after {MAX_HALVINGS} halvings"
    )))
}

/// A translation `a` with `‖a‖∞ <= ε` and `(Ω1 + a) ∩ Ω2 = ∅`.
pub fn find_perturbation(s1: &ConvexSet, s2: &ConvexSet, epsilon: &Rational) -> Result<Vector> {
    let v = check_extremal(s1, s2, Some(epsilon))?;
    v.perturbation
        .ok_or_else(|| Error::Precondition("the sets do not form an extremal system".into()))
}

fn sup_of(s: &ConvexSet, c: &[Rational]) -> Result<Extended> {
    Ok(match s.maximize(c)? {
        Support::Attained { value, .. } => Extended::Finite(value),
        Support::Unbounded { .. } => Extended::PosInfinity,
        Support::Empty => Extended::NegInfinity,
    })
}

fn inf_of(s: &ConvexSet, c: &[Rational]) -> Result<Extended> {
    Ok(match sup_of(s, &neg(c))? {
        Extended::Finite(v) => Extended::Finite(-v),
        Extended::PosInfinity => Extended::NegInfinity,
        Extended::NegInfinity => Extended::PosInfinity,
    })
}

/// A nonzero `x*` with `sup_{Ω1} x* <= inf_{Ω2} x*`, taken from a boundary
/// row of `Ω1 - Ω2`; `None` when 0 is interior to the difference.
pub fn separate(s1: &ConvexSet, s2: &ConvexSet) -> Result<Option<SeparationCertificate>> {
    let verdict = is_extremal_system(s1, s2)?;
    let Some(row) = verdict.boundary_evidence else {
        return Ok(None);
    };
    let functional = normalize_first(&row.normal);
    let sup1 = sup_of(s1, &functional)?;
    let inf2 = inf_of(s2, &functional)?;
    if sup1 > inf2 {
        return Err(Error::Internal("boundary row failed to separate".into()));
    }
    Ok(Some(SeparationCertificate {
        functional,
        sup1,
        inf2,
    }))
}

impl SeparationCertificate {
    /// Recomputes both extrema and checks the inequality and `x* != 0`.
    pub fn verify(&self, s1: &ConvexSet, s2: &ConvexSet) -> Result<bool> {
        Ok(self.functional.iter().any(|x| !x.is_zero())
            && sup_of(s1, &self.functional)? == self.sup1
            && inf_of(s2, &self.functional)? == self.inf2
            && self.sup1 <= self.inf2)
    }
}

/// `int Ω1 ≠ ∅` and `int Ω1 ∩ Ω2 = ∅`.
pub fn check_sufficient_interiority(s1: &ConvexSet, s2: &ConvexSet) -> Result<bool> {
    check_dim(s1.dim(), s2.dim())?;
    if s1.interior_point()?.is_none() {
        return Ok(false);
    }
    let (h1, h2) = (s1.hrep()?, s2.hrep()?);
    let n = s1.dim();
    // max t subject to A1 x + t·1 <= b1, x in Ω2, t <= 1
    let mut objective = zeros(n + 1);
    objective[n] = -Rational::one();
    let mut lp = LinearProgram::new(objective);
    for r in &h1.ineqs {
        let mut row = r.normal.clone();
        row.push(Rational::one());
        lp.ineq(row, r.rhs.clone());
    }
    for r in &h2.ineqs {
        let mut row = r.normal.clone();
        row.push(Rational::zero());
        lp.ineq(row, r.rhs.clone());
    }
    for r in &h2.eqs {
        let mut row = r.normal.clone();
        row.push(Rational::zero());
        lp.equal(row, r.rhs.clone());
    }
    let mut cap = zeros(n + 1);
    cap[n] = Rational::one();
    lp.ineq(cap, Rational::one());
    Ok(match solve_lp(&lp)? {
        LpOutcome::Optimal { value, .. } => !value.is_negative(),
        LpOutcome::Infeasible { .. } => true,
        LpOutcome::Unbounded { .. } => false,
    })
}

/// ε-approximate extremal principle at `x̄`.
///
/// With `a` a separating translation of size `ε²`, minimizes
/// `‖x1 - x2 + a‖∞ + ε(‖x1 - x̄‖∞ + ‖x2 - x̄‖∞)` over `Ω1 × Ω2`. Comparing with
/// `(x̄, x̄)` bounds both penalty terms by ε, and the multipliers of the rows
/// linearizing the first term give `y` with `‖y‖₁ = 1` and
/// `-y ∈ N(x1; Ω1) + εB*`, `y ∈ N(x2; Ω2) + εB*`.
pub fn approximate_extremal_principle(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
    epsilon: &Rational,
) -> Result<ApproxEpCertificate> {
    require_common(s1, s2, xbar)?;
    if !epsilon.is_positive() {
        return Err(Error::Input("epsilon must be positive".into()));
    }
    let a = find_perturbation(s1, s2, &(epsilon * epsilon))?;
    let n = s1.dim();
    let (h1, h2) = (s1.hrep()?, s2.hrep()?);
    // variables: x1 (n), x2 (n), s, u1, u2
    let (ix1, ix2, is, iu1, iu2) = (0, n, 2 * n, 2 * n + 1, 2 * n + 2);
    let nv = 2 * n + 3;
    let mut objective = zeros(nv);
    objective[is] = Rational::one();
    objective[iu1] = epsilon.clone();
    objective[iu2] = epsilon.clone();
    let mut lp = LinearProgram::new(objective);
    // rows 0..2n: ±(x1 - x2 + a)_i - s <= 0, alternating + and -
    for i in 0..n {
        for sign in [1, -1] {
            let mut row = zeros(nv);
            row[ix1 + i] = Rational::from_integer(sign.into());
            row[ix2 + i] = Rational::from_integer((-sign).into());
            row[is] = -Rational::one();
            let rhs = if sign > 0 { -a[i].clone() } else { a[i].clone() };
            lp.ineq(row, rhs);
        }
    }
    for (base, iu) in [(ix1, iu1), (ix2, iu2)] {
        for i in 0..n {
            for sign in [1, -1] {
                let mut row = zeros(nv);
                row[base + i] = Rational::from_integer(sign.into());
                row[iu] = -Rational::one();
                let rhs = if sign > 0 { xbar[i].clone() } else { -xbar[i].clone() };
                lp.ineq(row, rhs);
            }
        }
    }
    let mut eq_rows = Vec::new();
    for (base, h) in [(ix1, h1), (ix2, h2)] {
        for r in &h.ineqs {
            let mut row = zeros(nv);
            row[base..base + n].clone_from_slice(&r.normal);
            lp.ineq(row, r.rhs.clone());
        }
        for r in &h.eqs {
            let mut row = zeros(nv);
            row[base..base + n].clone_from_slice(&r.normal);
            eq_rows.push((row, r.rhs.clone()));
        }
    }
    for (row, rhs) in eq_rows {
        lp.equal(row, rhs);
    }
    let LpOutcome::Optimal { point, dual, .. } = solve_lp(&lp)? else {
        return Err(Error::Internal("penalized distance LP not optimal".into()));
    };
    let y: Vector = (0..n).map(|i| &dual[2 * i] - &dual[2 * i + 1]).collect();
    let cert = ApproxEpCertificate {
        epsilon: epsilon.clone(),
        perturbation: a,
        x1: point[ix1..ix1 + n].to_vec(),
        x2: point[ix2..ix2 + n].to_vec(),
        xstar1: neg(&y),
        xstar2: y,
    };
    if !cert.verify(s1, s2, xbar)? {
        return Err(Error::Internal(
            "approximate extremal principle certificate failed verification".into(),
        ));
    }
    Ok(cert)
}

impl ApproxEpCertificate {
    /// Checks the four conditions: `xi ∈ Ωi ∩ Ball(x̄, ε)`, ℓ1 distance from
    /// `xstar_i` to `N(xi; Ωi)` at most ε, unit ℓ1 norms, and zero sum.
    pub fn verify(&self, s1: &ConvexSet, s2: &ConvexSet, xbar: &[Rational]) -> Result<bool> {
        let eps = &self.epsilon;
        let near = |x: &[Rational]| {
            x.iter().zip(xbar).all(|(a, b)| (a - b).abs() <= *eps)
        };
        if !(s1.contains_point(&self.x1)? && s2.contains_point(&self.x2)?)
            || !near(&self.x1)
            || !near(&self.x2)
        {
            return Ok(false);
        }
        if norm_l1(&self.xstar1) != Rational::one() || norm_l1(&self.xstar2) != Rational::one() {
            return Ok(false);
        }
        if self.xstar1.iter().zip(&self.xstar2).any(|(a, b)| !(a + b).is_zero()) {
            return Ok(false);
        }
        let d1 = dual_distance(&normal_cone(s1, &self.x1)?, &self.xstar1)?;
        let d2 = dual_distance(&normal_cone(s2, &self.x2)?, &self.xstar2)?;
        Ok(d1 <= *eps && d2 <= *eps)
    }
}

/// Exact extremal principle: a nonzero `x* ∈ N(x̄; Ω1) ∩ (-N(x̄; Ω2))`.
pub fn exact_extremal_principle(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
) -> Result<Option<Functional>> {
    require_common(s1, s2, xbar)?;
    Ok(ep_condition(s1, s2, xbar)?.1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPoint {
    pub point: Point,
    pub functional: Functional,
}

/// For a boundary point `x̄`, a support point within ε together with a
/// nonzero functional attaining its maximum there. Polyhedral boundary
/// points are support points themselves, so `x = x̄`.
pub fn support_point_near(s: &ConvexSet, xbar: &[Rational], epsilon: &Rational) -> Result<SupportPoint> {
    if !epsilon.is_positive() {
        return Err(Error::Input("epsilon must be positive".into()));
    }
    if !s.contains_point(xbar)? || s.interior_contains(xbar)? {
        return Err(Error::Precondition("point is not on the boundary of the set".into()));
    }
    let h = s.hrep()?;
    let functional = match h.eqs.first() {
        Some(e) => normalize_first(&e.normal),
        None => h
            .ineqs
            .iter()
            .filter(|r| r.slack(xbar).is_zero())
            .map(|r| normalize_first(&r.normal))
            .min()
            .ok_or_else(|| Error::Internal("boundary point with no active row".into()))?,
    };
    match s.maximize(&functional)? {
        Support::Attained { value, .. } if value == dot(&functional, xbar) => Ok(SupportPoint {
            point: xbar.to_vec(),
            functional,
        }),
        _ => Err(Error::Internal("active row normal does not support the set".into())),
    }
}

impl SupportPoint {
    pub fn verify(&self, s: &ConvexSet, xbar: &[Rational], epsilon: &Rational) -> Result<bool> {
        let close = self
            .point
            .iter()
            .zip(xbar)
            .all(|(a, b)| (a - b).abs() <= *epsilon);
        let attained = matches!(
            s.maximize(&self.functional)?,
            Support::Attained { value, .. } if value == dot(&self.functional, &self.point)
        );
        Ok(close && attained && self.functional.iter().any(|x| !x.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat, vec_of};

    fn halfplanes() -> (ConvexSet, ConvexSet) {
        (
            ConvexSet::from_ineqs(2, vec![(vec_of(&[0, 1]), int(0))]).unwrap(),
            ConvexSet::from_ineqs(2, vec![(vec_of(&[0, -1]), int(0))]).unwrap(),
        )
    }

    fn boxed(lo: &[i64], hi: &[i64]) -> ConvexSet {
        ConvexSet::boxed(&vec_of(lo), &vec_of(hi)).unwrap()
    }

    #[test]
    fn halfplanes_are_extremal() {
        let (a, b) = halfplanes();
        let v = check_extremal(&a, &b, Some(&rat(1, 2))).unwrap();
        assert!(v.extremal);
        assert_eq!(v.perturbation, Some(vec![int(0), rat(-1, 2)]));
        let sep = separate(&a, &b).unwrap().unwrap();
        assert_eq!(sep.functional, vec_of(&[0, 1]));
        assert_eq!(sep.sup1, Extended::Finite(int(0)));
        assert!(sep.verify(&a, &b).unwrap());
        assert!(check_sufficient_interiority(&a, &b).unwrap());
        assert_eq!(exact_extremal_principle(&a, &b, &vec_of(&[0, 0])).unwrap(), Some(vec_of(&[0, 1])));
    }

    #[test]
    fn touching_boxes_perturbation() {
        let a = boxed(&[0, 0], &[1, 1]);
        let b = boxed(&[1, 0], &[2, 1]);
        assert_eq!(find_perturbation(&a, &b, &rat(1, 10)).unwrap(), vec![rat(-1, 10), int(0)]);
    }

    #[test]
    fn overlapping_boxes_not_extremal() {
        let a = boxed(&[0, 0], &[1, 1]);
        let v = is_extremal_system(&a, &a).unwrap();
        assert!(!v.extremal);
        assert_eq!(v.interior_ball_radius, Some(int(1)));
        assert!(separate(&a, &a).unwrap().is_none());
        assert!(matches!(find_perturbation(&a, &a, &int(1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn separated_boxes() {
        let a = boxed(&[0, 0], &[1, 1]);
        let b = boxed(&[2, 0], &[3, 1]);
        let sep = separate(&a, &b).unwrap().unwrap();
        assert_eq!(sep.functional, vec_of(&[1, 0]));
        assert_eq!((sep.sup1, sep.inf2), (Extended::Finite(int(1)), Extended::Finite(int(2))));
    }

    #[test]
    fn approximate_principle_on_halfplanes() {
        let (a, b) = halfplanes();
        let c = approximate_extremal_principle(&a, &b, &vec_of(&[0, 0]), &rat(1, 10)).unwrap();
        assert_eq!(c.xstar1, vec_of(&[0, 1]));
        assert_eq!(c.xstar2, vec_of(&[0, -1]));
    }

    #[test]
    fn approximate_principle_on_touching_boxes() {
        let a = boxed(&[0, 0], &[1, 1]);
        let b = boxed(&[1, 0], &[2, 1]);
        let xbar = vec![int(1), rat(1, 2)];
        for eps in [int(1), rat(1, 2), rat(1, 10), rat(1, 100)] {
            let c = approximate_extremal_principle(&a, &b, &xbar, &eps).unwrap();
            assert!(c.verify(&a, &b, &xbar).unwrap());
        }
    }

    #[test]
    fn support_point_on_square_corner() {
        let a = boxed(&[0, 0], &[1, 1]);
        let sp = support_point_near(&a, &vec_of(&[0, 0]), &rat(1, 10)).unwrap();
        assert_eq!(sp.functional, vec_of(&[-1, 0]));
        let sp = support_point_near(&a, &[int(0), rat(1, 2)], &rat(1, 10)).unwrap();
        assert_eq!(sp.functional, vec_of(&[-1, 0]));
        assert!(support_point_near(&a, &[rat(1, 2), rat(1, 2)], &int(1)).is_err());
    }
}
