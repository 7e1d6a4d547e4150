use num_traits::{One, Zero};

use super::{hrep_to_vrep, vrep_to_hrep, ConvexSet, DdLimits, HRep, VRep};
use crate::error::{check_dim, Result};
use crate::lp::{solve_lp, LinearProgram, LpOutcome};
use crate::rational::{Rational, Vector};

/// `Ω1 ∩ Ω2`, by stacking the H-descriptions.
pub fn intersect(a: &ConvexSet, b: &ConvexSet) -> Result<ConvexSet> {
    check_dim(a.dim(), b.dim())?;
    let (ha, hb) = (a.hrep()?, b.hrep()?);
    let mut ineqs = ha.ineqs.clone();
    ineqs.extend(hb.ineqs.iter().cloned());
    let mut eqs = ha.eqs.clone();
    eqs.extend(hb.eqs.iter().cloned());
    Ok(ConvexSet::from_hrep(super::tidy(a.dim(), ineqs, eqs)))
}

/// `Ω1 - Ω2 = Ω1 + (-Ω2)`.
pub fn difference_set(a: &ConvexSet, b: &ConvexSet) -> Result<ConvexSet> {
    minkowski_sum(a, &b.negate())
}

/// `Ω1 + Ω2`, returned with both descriptions filled in.
///
/// Candidate vertices are the pairwise sums `v1 + v2`. When the combined
/// recession cone is pointed, only pairs whose normal cones share a relative
/// interior point can produce a vertex, which keeps the candidate list near
/// the true vertex count.
pub fn minkowski_sum(a: &ConvexSet, b: &ConvexSet) -> Result<ConvexSet> {
    check_dim(a.dim(), b.dim())?;
    let n = a.dim();
    let (va, vb) = (a.vrep()?, b.vrep()?);
    if va.vertices.is_empty() || vb.vertices.is_empty() {
        return Ok(ConvexSet::empty(n));
    }
    let mut rays: Vec<Vector> = va.rays.iter().chain(&vb.rays).cloned().collect();
    rays.sort();
    rays.dedup();

    let pointed = is_pointed(n, &rays)?;
    let (ha, hb) = if pointed {
        (Some(a.hrep()?), Some(b.hrep()?))
    } else {
        (None, None)
    };
    let mut vertices = Vec::new();
    for v1 in &va.vertices {
        for v2 in &vb.vertices {
            if let (Some(ha), Some(hb)) = (ha, hb) {
                if !normal_relints_meet(ha, v1, hb, v2)? {
                    continue;
                }
            }
            vertices.push(v1.iter().zip(v2).map(|(x, y)| x + y).collect::<Vector>());
        }
    }
    vertices.sort();
    vertices.dedup();
    let limits = DdLimits::minkowski();
    let h = vrep_to_hrep(&VRep { dim: n, vertices, rays }, limits)?;
    let v = hrep_to_vrep(&h, limits)?;
    Ok(ConvexSet::from_both(h, v))
}

/// `cone(rays)` contains no line iff some `c` has `c·r <= -1` on every ray.
fn is_pointed(n: usize, rays: &[Vector]) -> Result<bool> {
    let mut lp = LinearProgram::feasibility(n);
    for r in rays {
        lp.ineq(r.clone(), -Rational::one());
    }
    Ok(solve_lp(&lp)?.is_optimal())
}

/// Whether `relint N(v1; Ω1) ∩ relint N(v2; Ω2)` is nonempty.
///
/// Each normal cone is generated by the active inequality normals (strictly
/// positive multipliers for the relative interior, scaled to `>= 1`) plus the
/// span of the equality normals.
fn normal_relints_meet(h1: &HRep, v1: &[Rational], h2: &HRep, v2: &[Rational]) -> Result<bool> {
    let active = |h: &HRep, v: &[Rational]| -> Vec<Vector> {
        h.ineqs
            .iter()
            .filter(|r| r.slack(v).is_zero())
            .map(|r| r.normal.clone())
            .collect()
    };
    let (a1, a2) = (active(h1, v1), active(h2, v2));
    let e1: Vec<&Vector> = h1.eqs.iter().map(|r| &r.normal).collect();
    let e2: Vec<&Vector> = h2.eqs.iter().map(|r| &r.normal).collect();

    // columns: a1 (>= 1), e1 (free), a2 (>= 1, negated), e2 (free, negated)
    let mut cols: Vec<(Vector, bool)> = Vec::new();
    cols.extend(a1.iter().map(|g| (g.clone(), true)));
    cols.extend(e1.iter().map(|g| ((*g).clone(), false)));
    cols.extend(a2.iter().map(|g| (g.iter().map(|x| -x).collect(), true)));
    cols.extend(e2.iter().map(|g| (g.iter().map(|x| -x).collect(), false)));
    let n = v1.len();
    let mut lp = LinearProgram::feasibility(cols.len());
    for i in 0..n {
        lp.equal(cols.iter().map(|(g, _)| g[i].clone()).collect(), Rational::zero());
    }
    for (j, (_, positive)) in cols.iter().enumerate() {
        if *positive {
            let mut row = vec![Rational::zero(); cols.len()];
            row[j] = -Rational::one();
            lp.ineq(row, -Rational::one());
        }
    }
    Ok(solve_lp(&lp)?.is_optimal())
}

/// Some `r` in `(0, 1]` with `[-r, r]^n ⊆ Ω1 - Ω2`, or `None` when the
/// origin is not interior to the difference.
///
/// Works on the lifted system in `(x1, x2)` without forming the Minkowski
/// sum: one LP per sign pattern `σ ∈ {±1}^n` maximizes `t <= 1` with
/// `x1 - x2 = tσ`. When 0 lies in the difference, the box of radius
/// `min t_σ` is the convex hull of points of the difference.
pub fn difference_interior_radius(a: &ConvexSet, b: &ConvexSet) -> Result<Option<Rational>> {
    check_dim(a.dim(), b.dim())?;
    let n = a.dim();
    if n > 16 {
        return Err(crate::error::Error::Capability(format!(
            "corner enumeration limited to dimension 16, got {n}"
        )));
    }
    let (ha, hb) = (a.hrep()?, b.hrep()?);
    let t = 2 * n;
    let base = |objective: Vector| {
        let mut lp = LinearProgram::new(objective);
        for (h, off) in [(ha, 0), (hb, n)] {
            for r in &h.ineqs {
                let mut row = vec![Rational::zero(); t + 1];
                row[off..off + n].clone_from_slice(&r.normal);
                lp.ineq(row, r.rhs.clone());
            }
            for r in &h.eqs {
                let mut row = vec![Rational::zero(); t + 1];
                row[off..off + n].clone_from_slice(&r.normal);
                lp.equal(row, r.rhs.clone());
            }
        }
        lp
    };
    let mut objective = vec![Rational::zero(); t + 1];
    objective[t] = -Rational::one();
    let mut radius = Rational::one();
    for mask in 0u32..(1 << n) {
        let mut lp = base(objective.clone());
        for i in 0..n {
            let mut row = vec![Rational::zero(); t + 1];
            row[i] = Rational::one();
            row[n + i] = -Rational::one();
            row[t] = if mask & (1 << i) != 0 { Rational::one() } else { -Rational::one() };
            lp.equal(row, Rational::zero());
        }
        let mut cap = vec![Rational::zero(); t + 1];
        cap[t] = Rational::one();
        lp.ineq(cap, Rational::one());
        match solve_lp(&lp)? {
            LpOutcome::Optimal { value, .. } if value < Rational::zero() => {
                let reach = -value;
                if reach < radius {
                    radius = reach;
                }
            }
            _ => return Ok(None),
        }
    }
    // 0 itself must lie in the difference for the hull argument
    let mut lp = base(vec![Rational::zero(); t + 1]);
    for i in 0..n {
        let mut row = vec![Rational::zero(); t + 1];
        row[i] = Rational::one();
        row[n + i] = -Rational::one();
        lp.equal(row, Rational::zero());
    }
    if !solve_lp(&lp)?.is_optimal() {
        return Ok(None);
    }
    Ok(Some(radius))
}
