//! Finitely generated cones and normal cones of polyhedra.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{orthogonal_basis, project_out, rref};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, VarSign};
use crate::polyhedron::{cone_generators, ConvexSet};
use crate::rational::{
    from_integers, from_strs, is_zero_vec, neg, normalize_first, primitive_integer, to_strs,
    Functional, RatStr, Rational, Vector,
};

/// `cone(generators) + span(lineality)`.
///
/// Values built through [`PolyhedralCone::new`] are canonical: the lineality
/// list is a reduced echelon basis, generators are the extreme rays of the
/// pointed part projected onto the orthogonal complement of the lineality
/// space, scaled to a leading ±1 and sorted. Equal cones therefore compare
/// equal with `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralCone {
    pub dim: usize,
    pub generators: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

impl PolyhedralCone {
    pub fn new(dim: usize, generators: Vec<Vector>, lineality: Vec<Vector>) -> Result<Self> {
        for g in generators.iter().chain(&lineality) {
            check_dim(dim, g.len())?;
        }
        if dim > 8 {
            return Err(Error::Capability(format!(
                "cone canonicalization limited to dimension 8, got {dim}"
            )));
        }
        Ok(canonicalize(dim, &generators, &lineality))
    }

    pub fn trivial(dim: usize) -> Self {
        PolyhedralCone {
            dim,
            generators: Vec::new(),
            lineality: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty() && self.lineality.is_empty()
    }

    /// Outer description: `(ineqs, eqs)` with the cone equal to
    /// `{x : a·x <= 0, e·x = 0}`.
    pub fn constraints(&self) -> (Vec<Vector>, Vec<Vector>) {
        let polar = polar(self.dim, &self.generators, &self.lineality);
        (
            polar.rays.iter().map(|v| from_integers(v)).collect(),
            polar.lineality.iter().map(|v| from_integers(v)).collect(),
        )
    }

    /// Nonnegative multipliers on the generators and free ones on the
    /// lineality basis expressing `v`, if any.
    pub fn decompose(&self, v: &[Rational]) -> Result<Option<(Vec<Rational>, Vec<Rational>)>> {
        check_dim(self.dim, v.len())?;
        let k = self.generators.len();
        let cols: Vec<&Vector> = self.generators.iter().chain(&self.lineality).collect();
        let mut lp = LinearProgram::feasibility(cols.len());
        for i in 0..self.dim {
            lp.equal(cols.iter().map(|g| g[i].clone()).collect(), v[i].clone());
        }
        for j in 0..k {
            lp.set_sign(j, VarSign::NonNegative);
        }
        Ok(match solve_lp(&lp)? {
            LpOutcome::Optimal { mut point, .. } => {
                let lin = point.split_off(k);
                Some((point, lin))
            }
            _ => None,
        })
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.decompose(v)?.is_some())
    }

    /// Mutual containment of generators, lineality taken with both signs.
    pub fn contains_cone(&self, other: &PolyhedralCone) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        for g in other.generators.iter() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for l in other.lineality.iter() {
            if !self.contains(l)? || !self.contains(&neg(l))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn negate(&self) -> PolyhedralCone {
        canonicalize(
            self.dim,
            &self.generators.iter().map(|g| neg(g)).collect::<Vec<_>>(),
            &self.lineality,
        )
    }
}

fn to_int(v: &[Vector]) -> Vec<Vec<BigInt>> {
    v.iter().filter(|x| !is_zero_vec(x)).map(|x| primitive_integer(x)).collect()
}

fn polar(dim: usize, generators: &[Vector], lineality: &[Vector]) -> crate::polyhedron::ConeGenerators {
    cone_generators(dim, &to_int(generators), &to_int(lineality))
}

fn canonicalize(dim: usize, generators: &[Vector], lineality: &[Vector]) -> PolyhedralCone {
    let p = polar(dim, generators, lineality);
    let inner = cone_generators(dim, &p.rays, &p.lineality);
    let lines: Vec<Vector> = inner.lineality.iter().map(|l| from_integers(l)).collect();
    let ortho = orthogonal_basis(&lines);
    let mut gens: Vec<Vector> = inner
        .rays
        .iter()
        .map(|r| project_out(&from_integers(r), &ortho))
        .filter(|r| !is_zero_vec(r))
        .map(|r| normalize_first(&r))
        .collect();
    gens.sort();
    gens.dedup();
    PolyhedralCone {
        dim,
        generators: gens,
        lineality: rref(&lines, dim),
    }
}

/// `N(x̄; Ω)`: active inequality normals plus the span of equality normals.
pub fn normal_cone(s: &ConvexSet, xbar: &[Rational]) -> Result<PolyhedralCone> {
    if !s.contains_point(xbar)? {
        return Err(Error::Precondition("normal cone needs a point of the set".into()));
    }
    let h = s.hrep()?;
    let active: Vec<Vector> = h
        .ineqs
        .iter()
        .filter(|r| r.slack(xbar).is_zero())
        .map(|r| r.normal.clone())
        .collect();
    let eqs: Vec<Vector> = h.eqs.iter().map(|r| r.normal.clone()).collect();
    PolyhedralCone::new(s.dim(), active, eqs)
}

pub fn cone_sum(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<PolyhedralCone> {
    check_dim(a.dim, b.dim)?;
    let gens: Vec<Vector> = a.generators.iter().chain(&b.generators).cloned().collect();
    let lin: Vec<Vector> = a.lineality.iter().chain(&b.lineality).cloned().collect();
    PolyhedralCone::new(a.dim, gens, lin)
}

pub fn cone_negate(c: &PolyhedralCone) -> PolyhedralCone {
    c.negate()
}

pub fn cone_intersect(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<PolyhedralCone> {
    check_dim(a.dim, b.dim)?;
    let pa = polar(a.dim, &a.generators, &a.lineality);
    let pb = polar(b.dim, &b.generators, &b.lineality);
    let ineqs: Vec<Vec<BigInt>> = pa.rays.into_iter().chain(pb.rays).collect();
    let eqs: Vec<Vec<BigInt>> = pa.lineality.into_iter().chain(pb.lineality).collect();
    let g = cone_generators(a.dim, &ineqs, &eqs);
    let gens: Vec<Vector> = g.rays.iter().map(|r| from_integers(r)).collect();
    let lin: Vec<Vector> = g.lineality.iter().map(|r| from_integers(r)).collect();
    PolyhedralCone::new(a.dim, gens, lin)
}

pub fn cone_contains(c: &PolyhedralCone, v: &[Rational]) -> Result<bool> {
    c.contains(v)
}

pub fn cones_equal(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<bool> {
    Ok(a.contains_cone(b)? && b.contains_cone(a)?)
}

pub fn cone_is_trivial(c: &PolyhedralCone) -> bool {
    c.is_trivial()
}

/// Whether `N(x̄; Ω1) ∩ (-N(x̄; Ω2))` is nontrivial, with the first
/// canonical generator (else the first lineality vector) as witness.
pub fn ep_condition(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
) -> Result<(bool, Option<Functional>)> {
    let n1 = normal_cone(s1, xbar)?;
    let n2 = normal_cone(s2, xbar)?;
    let meet = cone_intersect(&n1, &n2.negate())?;
    let witness = meet
        .generators
        .first()
        .or_else(|| meet.lineality.first())
        .cloned();
    Ok((witness.is_some(), witness))
}

/// ℓ1 distance from `v` to the cone, by LP. Zero iff `v` is in the cone.
pub fn dual_distance(c: &PolyhedralCone, v: &[Rational]) -> Result<Rational> {
    check_dim(c.dim, v.len())?;
    let n = c.dim;
    let k = c.generators.len();
    let m = k + c.lineality.len();
    // variables: multipliers (m), u (n) with |v - sum| <= u
    let mut objective = vec![Rational::zero(); m + n];
    for o in objective.iter_mut().skip(m) {
        *o = Rational::one();
    }
    let mut lp = LinearProgram::new(objective);
    let cols: Vec<&Vector> = c.generators.iter().chain(&c.lineality).collect();
    for i in 0..n {
        let mut row: Vector = cols.iter().map(|g| g[i].clone()).collect();
        row.resize(m + n, Rational::zero());
        let mut neg_row: Vector = row.iter().map(|x| -x).collect();
        row[m + i] = -Rational::one();
        neg_row[m + i] = -Rational::one();
        // sum - v <= u and v - sum <= u
        lp.ineq(row, v[i].clone());
        lp.ineq(neg_row, -v[i].clone());
    }
    for j in 0..k {
        lp.set_sign(j, VarSign::NonNegative);
    }
    match solve_lp(&lp)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => Err(Error::Internal(format!("distance LP not optimal: {other:?}"))),
    }
}

/// Serialized form shared with the instance format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    pub dim: usize,
    #[serde(default)]
    pub generators: Vec<Vec<RatStr>>,
    #[serde(default)]
    pub lineality: Vec<Vec<RatStr>>,
}

impl From<&PolyhedralCone> for ConeDoc {
    fn from(c: &PolyhedralCone) -> Self {
        ConeDoc {
            dim: c.dim,
            generators: c.generators.iter().map(|g| to_strs(g)).collect(),
            lineality: c.lineality.iter().map(|g| to_strs(g)).collect(),
        }
    }
}

impl ConeDoc {
    pub fn to_cone(&self) -> Result<PolyhedralCone> {
        PolyhedralCone::new(
            self.dim,
            self.generators.iter().map(|g| from_strs(g)).collect(),
            self.lineality.iter().map(|g| from_strs(g)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, vec_of};

    fn square() -> ConvexSet {
        ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap()
    }

    #[test]
    fn corner_normal_cone() {
        let c = normal_cone(&square(), &vec_of(&[0, 0])).unwrap();
        assert_eq!(c.generators, vec![vec_of(&[-1, 0]), vec_of(&[0, -1])]);
        assert!(c.lineality.is_empty());
        assert!(c.contains(&vec_of(&[-2, -3])).unwrap());
        assert!(!c.contains(&vec_of(&[1, 0])).unwrap());
    }

    #[test]
    fn interior_normal_cone_is_trivial() {
        let half = crate::rational::rat(1, 2);
        let c = normal_cone(&square(), &[half.clone(), half]).unwrap();
        assert!(cone_is_trivial(&c));
    }

    #[test]
    fn ray_with_line() {
        // {0} x [0, inf) at the origin: N = R x (-inf, 0]
        let s = ConvexSet::from_hrep(
            crate::polyhedron::HRep::new(
                2,
                vec![crate::polyhedron::Row::new(vec_of(&[0, -1]), int(0))],
                vec![crate::polyhedron::Row::new(vec_of(&[1, 0]), int(0))],
            )
            .unwrap(),
        );
        let c = normal_cone(&s, &vec_of(&[0, 0])).unwrap();
        assert_eq!(c.generators, vec![vec_of(&[0, -1])]);
        assert_eq!(c.lineality, vec![vec_of(&[1, 0])]);
    }

    #[test]
    fn redundant_generator_canonical() {
        let a = PolyhedralCone::new(2, vec![vec_of(&[1, 0]), vec_of(&[0, 1])], vec![]).unwrap();
        let b = PolyhedralCone::new(
            2,
            vec![vec_of(&[1, 0]), vec_of(&[0, 3]), vec_of(&[1, 1])],
            vec![],
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(cones_equal(&a, &b).unwrap());
    }

    #[test]
    fn opposite_rays_become_a_line() {
        let c = PolyhedralCone::new(2, vec![vec_of(&[1, 1]), vec_of(&[-2, -2]), vec_of(&[0, 1])], vec![])
            .unwrap();
        assert_eq!(c.lineality, vec![vec_of(&[1, 1])]);
        assert_eq!(c.generators, vec![vec_of(&[-1, 1])]);
    }

    #[test]
    fn axes_meet_trivially() {
        let a = PolyhedralCone::new(2, vec![vec_of(&[1, 0])], vec![]).unwrap();
        let b = PolyhedralCone::new(2, vec![vec_of(&[0, 1])], vec![]).unwrap();
        assert!(cone_intersect(&a, &b).unwrap().is_trivial());
        assert_eq!(cone_sum(&a, &PolyhedralCone::trivial(2)).unwrap(), a);
    }

    #[test]
    fn distance_to_cone() {
        let a = PolyhedralCone::new(2, vec![vec_of(&[1, 0])], vec![]).unwrap();
        assert_eq!(dual_distance(&a, &vec_of(&[3, -2])).unwrap(), int(2));
        assert_eq!(dual_distance(&a, &vec_of(&[-1, 1])).unwrap(), int(2));
    }
}
