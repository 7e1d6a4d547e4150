//! Convex polyhedra in H- and V-representation.
//!
//! A [`ConvexSet`] carries at least one representation and computes the
//! other on demand with the double description method (cached, write-once).
//! Membership, interiority and core tests work directly on whichever
//! representation the question is naturally posed in; the two routes are
//! cross-checked in the test suite.

mod dd;
mod ops;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::OnceCell;

pub use dd::{cone_generators, ConeGenerators};
pub use ops::{difference_interior_radius, difference_set, intersect, minkowski_sum};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{orthogonal_basis, project_out, rref};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, VarSign};
use crate::rational::{
    dot, from_integers, normalize_first, norm_l1, primitive_integer, unit, Point, Rational, Vector,
};

/// One linear constraint `normal·x <= rhs` (or `= rhs` in an equality list).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub normal: Vector,
    pub rhs: Rational,
}

impl Row {
    pub fn new(normal: Vector, rhs: Rational) -> Self {
        Row { normal, rhs }
    }

    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.rhs - dot(&self.normal, x)
    }

    fn is_trivial(&self) -> bool {
        self.normal.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<Row>,
    pub eqs: Vec<Row>,
}

impl HRep {
    /// Validates row lengths and drops zero-normal rows (which must be
    /// trivially satisfied).
    pub fn new(dim: usize, ineqs: Vec<Row>, eqs: Vec<Row>) -> Result<HRep> {
        for r in ineqs.iter().chain(&eqs) {
            check_dim(dim, r.normal.len())?;
        }
        if dim == 0 {
            return Err(Error::Input("ambient dimension must be positive".into()));
        }
        if ineqs.iter().any(|r| r.is_trivial() && r.rhs.is_negative()) {
            return Err(Error::Input(
                "zero-normal inequality with negative right-hand side".into(),
            ));
        }
        if eqs.iter().any(|r| r.is_trivial() && !r.rhs.is_zero()) {
            return Err(Error::Input(
                "zero-normal equality with nonzero right-hand side".into(),
            ));
        }
        Ok(HRep {
            dim,
            ineqs: ineqs.into_iter().filter(|r| !r.is_trivial()).collect(),
            eqs: eqs.into_iter().filter(|r| !r.is_trivial()).collect(),
        })
    }

    pub fn universe(dim: usize) -> HRep {
        HRep {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    /// Canonical empty set: `x1 <= 0` and `-x1 <= -1`.
    pub fn empty(dim: usize) -> HRep {
        let mut up = unit(dim, 0);
        let down: Vector = up.iter().map(|x| -x).collect();
        let first = Row::new(std::mem::take(&mut up), Rational::zero());
        HRep {
            dim,
            ineqs: vec![Row::new(down, -Rational::one()), first],
            eqs: Vec::new(),
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.ineqs.iter().all(|r| !r.slack(x).is_negative())
            && self.eqs.iter().all(|r| r.slack(x).is_zero())
    }

    pub fn strictly_satisfies(&self, x: &[Rational]) -> bool {
        self.eqs.is_empty() && self.ineqs.iter().all(|r| r.slack(x).is_positive())
    }

    /// LP over `x` (all free) with this set's rows.
    pub fn lp(&self, objective: Vector) -> LinearProgram {
        let mut lp = LinearProgram::new(objective);
        for r in &self.ineqs {
            lp.ineq(r.normal.clone(), r.rhs.clone());
        }
        for r in &self.eqs {
            lp.equal(r.normal.clone(), r.rhs.clone());
        }
        lp
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(solve_lp(&self.lp(vec![Rational::zero(); self.dim]))?.is_infeasible())
    }

    fn rows_count(&self) -> usize {
        self.ineqs.len() + self.eqs.len()
    }

    /// Canonical irredundant description: implicit equalities are moved to
    /// the equality list, equalities are brought to reduced echelon form,
    /// inequalities are projected onto the orthogonal complement of the
    /// equality normals, scaled so the first nonzero coefficient is ±1, pruned
    /// of redundancy with one LP per row, and sorted.
    pub fn canonicalize(&self) -> Result<HRep> {
        if self.is_empty()? {
            return Ok(HRep::empty(self.dim));
        }
        let (mut ineqs, mut eqs) = (self.ineqs.clone(), self.eqs.clone());
        let implicit = implicit_equalities(self)?;
        let mut kept = Vec::new();
        for (i, r) in ineqs.drain(..).enumerate() {
            if implicit[i] {
                eqs.push(r);
            } else {
                kept.push(r);
            }
        }
        let tidy = tidy(self.dim, kept, eqs);
        let mut rows = tidy.ineqs;
        let mut i = 0;
        while i < rows.len() {
            let mut others = HRep {
                dim: self.dim,
                ineqs: rows.clone(),
                eqs: tidy.eqs.clone(),
            };
            let row = others.ineqs.remove(i);
            let lp = others.lp(row.normal.iter().map(|x| -x).collect());
            let redundant = match solve_lp(&lp)? {
                LpOutcome::Optimal { value, .. } => -value <= row.rhs,
                _ => false,
            };
            if redundant {
                rows.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(HRep {
            dim: self.dim,
            ineqs: rows,
            eqs: tidy.eqs,
        })
    }
}

/// Flags inequality rows that hold with equality on the whole (nonempty) set.
fn implicit_equalities(h: &HRep) -> Result<Vec<bool>> {
    let m = h.ineqs.len();
    let n = h.dim;
    let mut loose = vec![false; m];
    loop {
        let open: Vec<usize> = (0..m).filter(|&i| !loose[i]).collect();
        if open.is_empty() {
            break;
        }
        // maximize sum of slack margins t_i (0 <= t_i <= 1) on open rows
        let nv = n + open.len();
        let mut objective = vec![Rational::zero(); nv];
        for o in objective.iter_mut().skip(n) {
            *o = -Rational::one();
        }
        let mut lp = LinearProgram::new(objective);
        for (i, r) in h.ineqs.iter().enumerate() {
            let mut row = r.normal.clone();
            row.resize(nv, Rational::zero());
            if let Some(k) = open.iter().position(|&o| o == i) {
                row[n + k] = Rational::one();
            }
            lp.ineq(row, r.rhs.clone());
        }
        for r in &h.eqs {
            let mut row = r.normal.clone();
            row.resize(nv, Rational::zero());
            lp.equal(row, r.rhs.clone());
        }
        for k in 0..open.len() {
            let mut row = vec![Rational::zero(); nv];
            row[n + k] = Rational::one();
            lp.ineq(row, Rational::one());
            lp.set_sign(n + k, VarSign::NonNegative);
        }
        let LpOutcome::Optimal { point, .. } = solve_lp(&lp)? else {
            return Err(Error::Internal("slack LP not optimal on nonempty set".into()));
        };
        let mut progress = false;
        for (k, &i) in open.iter().enumerate() {
            if point[n + k].is_positive() {
                loose[i] = true;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    Ok(loose.into_iter().map(|l| !l).collect())
}

/// LP-free normalization shared by every constructor that already knows its
/// rows are irredundant (or does not care).
pub(crate) fn tidy(dim: usize, ineqs: Vec<Row>, eqs: Vec<Row>) -> HRep {
    let augmented: Vec<Vector> = eqs
        .iter()
        .map(|r| {
            let mut v = r.normal.clone();
            v.push(r.rhs.clone());
            v
        })
        .collect();
    let eqs: Vec<Row> = rref(&augmented, dim + 1)
        .into_iter()
        .map(|mut v| {
            let rhs = v.pop().unwrap();
            Row::new(v, rhs)
        })
        .collect();
    if eqs.iter().any(|r| r.is_trivial()) {
        // inconsistent equalities reduce to 0 = 1
        return HRep::empty(dim);
    }
    let ortho = orthogonal_eq_rows(&eqs);
    let mut rows: Vec<Row> = Vec::with_capacity(ineqs.len());
    for r in ineqs {
        let r = project_row(&r, &ortho);
        if r.is_trivial() {
            if r.rhs.is_negative() {
                return HRep::empty(dim);
            }
            continue;
        }
        let n = normalize_first(&r.normal);
        let k = first_nonzero(&n);
        let s = &n[k] / &r.normal[k];
        rows.push(Row::new(n, &r.rhs * s));
    }
    rows.sort();
    rows.dedup_by(|b, a| a.normal == b.normal);
    HRep { dim, ineqs: rows, eqs }
}

fn first_nonzero(v: &[Rational]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(0)
}

/// Gram-Schmidt on equality rows, carrying the right-hand side along.
fn orthogonal_eq_rows(eqs: &[Row]) -> Vec<Row> {
    let mut out: Vec<Row> = Vec::new();
    for e in eqs {
        let r = project_row(e, &out);
        if !r.is_trivial() {
            out.push(r);
        }
    }
    out
}

fn project_row(r: &Row, ortho: &[Row]) -> Row {
    let mut normal = r.normal.clone();
    let mut rhs = r.rhs.clone();
    for u in ortho {
        let c = dot(&normal, &u.normal) / dot(&u.normal, &u.normal);
        if !c.is_zero() {
            for (x, y) in normal.iter_mut().zip(&u.normal) {
                *x -= &c * y;
            }
            rhs -= &c * &u.rhs;
        }
    }
    Row::new(normal, rhs)
}

/// `conv(vertices) + cone(rays)`. Lines are stored as opposite ray pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<Point>,
    pub rays: Vec<Vector>,
}

impl VRep {
    pub fn new(dim: usize, vertices: Vec<Point>, rays: Vec<Vector>) -> Result<VRep> {
        if dim == 0 {
            return Err(Error::Input("ambient dimension must be positive".into()));
        }
        for v in vertices.iter().chain(&rays) {
            check_dim(dim, v.len())?;
        }
        if vertices.is_empty() && !rays.is_empty() {
            return Err(Error::Input("rays given without any vertex".into()));
        }
        Ok(VRep {
            dim,
            vertices,
            rays: rays
                .into_iter()
                .filter(|r| r.iter().any(|x| !x.is_zero()))
                .collect(),
        })
    }

    pub fn empty(dim: usize) -> VRep {
        VRep {
            dim,
            vertices: Vec::new(),
            rays: Vec::new(),
        }
    }

    /// Membership LP: `x = sum l_k v_k + sum m_j r_j`, `l, m >= 0`, `sum l = 1`.
    fn combination_lp(&self, x: &[Rational]) -> LinearProgram {
        let nv = self.vertices.len() + self.rays.len();
        let mut lp = LinearProgram::feasibility(nv);
        for i in 0..self.dim {
            let row: Vector = self
                .vertices
                .iter()
                .chain(&self.rays)
                .map(|g| g[i].clone())
                .collect();
            lp.equal(row, x[i].clone());
        }
        let mut ones = vec![Rational::zero(); nv];
        for o in ones.iter_mut().take(self.vertices.len()) {
            *o = Rational::one();
        }
        lp.equal(ones, Rational::one());
        for j in 0..nv {
            lp.set_sign(j, VarSign::NonNegative);
        }
        lp
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        if self.vertices.is_empty() {
            return Ok(false);
        }
        Ok(solve_lp(&self.combination_lp(x))?.is_optimal())
    }
}

/// Resource caps for the double description method.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DdLimits {
    pub max_dim: usize,
    pub max_input: usize,
}

impl Default for DdLimits {
    fn default() -> Self {
        DdLimits {
            max_dim: 8,
            max_input: 64,
        }
    }
}

impl DdLimits {
    /// Raised input cap for the candidate sums inside Minkowski sums, whose
    /// count is the product of the operands' vertex counts.
    pub fn minkowski() -> Self {
        DdLimits {
            max_dim: 8,
            max_input: 64 * 64,
        }
    }

    fn check(&self, dim: usize, inputs: usize) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::Capability(format!(
                "double description limited to dimension {}, got {dim}",
                self.max_dim
            )));
        }
        if inputs > self.max_input {
            return Err(Error::Capability(format!(
                "double description limited to {} rows/generators, got {inputs}",
                self.max_input
            )));
        }
        Ok(())
    }
}

fn integer_row(normal: &[Rational], last: Rational) -> Vec<BigInt> {
    let mut v = normal.to_vec();
    v.push(last);
    primitive_integer(&v)
}

/// Vertices and rays of `{x : ineqs, eqs}` by homogenization `(x, t)`, `t >= 0`.
pub fn hrep_to_vrep(h: &HRep, limits: DdLimits) -> Result<VRep> {
    limits.check(h.dim, h.rows_count())?;
    let n = h.dim;
    let mut ineqs: Vec<Vec<BigInt>> = h
        .ineqs
        .iter()
        .map(|r| integer_row(&r.normal, -r.rhs.clone()))
        .collect();
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[n] = BigInt::from(-1);
    ineqs.push(t_row);
    let eqs: Vec<Vec<BigInt>> = h
        .eqs
        .iter()
        .map(|r| integer_row(&r.normal, -r.rhs.clone()))
        .collect();
    let gens = cone_generators(n + 1, &ineqs, &eqs);

    let lines: Vec<Vector> = gens
        .lineality
        .iter()
        .map(|l| from_integers(&l[..n]))
        .collect();
    let ortho = orthogonal_basis(&lines);
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in &gens.rays {
        let t = Rational::from_integer(r[n].clone());
        let x = project_out(&from_integers(&r[..n]), &ortho);
        if t.is_positive() {
            vertices.push(x.iter().map(|c| c / &t).collect::<Vector>());
        } else if x.iter().any(|c| !c.is_zero()) {
            rays.push(normalize_first(&x));
        }
    }
    if vertices.is_empty() {
        return Ok(VRep::empty(n));
    }
    for l in rref(&lines, n) {
        rays.push(l.iter().map(|x| -x).collect());
        rays.push(l);
    }
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    Ok(VRep {
        dim: n,
        vertices,
        rays,
    })
}

/// Facets (and affine hull) of `conv(vertices) + cone(rays)` via the polar
/// cone of the homogenized generators.
pub fn vrep_to_hrep(v: &VRep, limits: DdLimits) -> Result<HRep> {
    if v.vertices.is_empty() {
        return Ok(HRep::empty(v.dim));
    }
    let n = v.dim;
    let mut gens: Vec<Vec<BigInt>> = v
        .vertices
        .iter()
        .map(|p| integer_row(p, Rational::one()))
        .chain(v.rays.iter().map(|r| integer_row(r, Rational::zero())))
        .collect();
    gens.sort();
    gens.dedup();
    limits.check(n, gens.len())?;
    let polar = cone_generators(n + 1, &gens, &[]);
    let to_row = |w: &Vec<BigInt>| {
        let w = from_integers(w);
        Row::new(w[..n].to_vec(), -w[n].clone())
    };
    let ineqs: Vec<Row> = polar.rays.iter().map(to_row).collect();
    let eqs: Vec<Row> = polar.lineality.iter().map(to_row).collect();
    Ok(tidy(n, ineqs, eqs))
}

/// A convex polyhedron with lazily completed dual description.
#[derive(Clone, Debug)]
pub struct ConvexSet {
    dim: usize,
    h: OnceCell<HRep>,
    v: OnceCell<VRep>,
}

impl ConvexSet {
    pub fn from_hrep(h: HRep) -> ConvexSet {
        ConvexSet {
            dim: h.dim,
            h: OnceCell::with_value(h),
            v: OnceCell::new(),
        }
    }

    pub fn from_vrep(v: VRep) -> ConvexSet {
        ConvexSet {
            dim: v.dim,
            h: OnceCell::new(),
            v: OnceCell::with_value(v),
        }
    }

    pub(crate) fn from_both(h: HRep, v: VRep) -> ConvexSet {
        debug_assert_eq!(h.dim, v.dim);
        ConvexSet {
            dim: h.dim,
            h: OnceCell::with_value(h),
            v: OnceCell::with_value(v),
        }
    }

    /// Builds from inequality rows given as `(normal, rhs)` pairs.
    pub fn from_ineqs(dim: usize, rows: Vec<(Vector, Rational)>) -> Result<ConvexSet> {
        let rows = rows.into_iter().map(|(a, b)| Row::new(a, b)).collect();
        Ok(ConvexSet::from_hrep(HRep::new(dim, rows, Vec::new())?))
    }

    pub fn empty(dim: usize) -> ConvexSet {
        ConvexSet::from_both(HRep::empty(dim), VRep::empty(dim))
    }

    pub fn universe(dim: usize) -> ConvexSet {
        ConvexSet::from_hrep(HRep::universe(dim))
    }

    /// Axis-aligned box `lo <= x <= hi`.
    pub fn boxed(lo: &[Rational], hi: &[Rational]) -> Result<ConvexSet> {
        check_dim(lo.len(), hi.len())?;
        let n = lo.len();
        let mut rows = Vec::new();
        for i in 0..n {
            let e = unit(n, i);
            rows.push(Row::new(e.iter().map(|x| -x).collect(), -lo[i].clone()));
            rows.push(Row::new(e, hi[i].clone()));
        }
        Ok(ConvexSet::from_hrep(HRep::new(n, rows, Vec::new())?))
    }

    pub fn point(p: &[Rational]) -> Result<ConvexSet> {
        Ok(ConvexSet::from_vrep(VRep::new(p.len(), vec![p.to_vec()], Vec::new())?))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_hrep(&self) -> bool {
        self.h.get().is_some()
    }

    pub fn has_vrep(&self) -> bool {
        self.v.get().is_some()
    }

    pub fn hrep(&self) -> Result<&HRep> {
        self.h
            .get_or_try_init(|| vrep_to_hrep(self.v.get().expect("one representation"), DdLimits::default()))
    }

    pub fn vrep(&self) -> Result<&VRep> {
        self.v
            .get_or_try_init(|| hrep_to_vrep(self.h.get().expect("one representation"), DdLimits::default()))
    }

    pub fn to_hrep(&self) -> Result<HRep> {
        self.hrep().cloned()
    }

    pub fn to_vrep(&self) -> Result<VRep> {
        self.vrep().cloned()
    }

    pub fn to_vrep_with(&self, limits: DdLimits) -> Result<VRep> {
        match self.v.get() {
            Some(v) => Ok(v.clone()),
            None => hrep_to_vrep(self.h.get().expect("one representation"), limits),
        }
    }

    pub fn to_hrep_with(&self, limits: DdLimits) -> Result<HRep> {
        match self.h.get() {
            Some(h) => Ok(h.clone()),
            None => vrep_to_hrep(self.v.get().expect("one representation"), limits),
        }
    }

    pub fn contains_point(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        match self.h.get() {
            Some(h) => Ok(h.contains(x)),
            None => self.v.get().expect("one representation").contains(x),
        }
    }

    /// Topological interior membership: no equalities, and every row strict
    /// at `x`. Holds for any H-description, redundant or not.
    pub fn interior_contains(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.hrep()?.strictly_satisfies(x))
    }

    /// Algebraic core membership: for each of the directions `±e_i` the
    /// largest step `t` with `x + t v` in the set must be positive. Runs the
    /// step LP on the V-description when one is stored, else on the H rows.
    pub fn core_contains(&self, x: &[Rational]) -> Result<bool> {
        if !self.contains_point(x)? {
            return Err(Error::Precondition("core test needs a point of the set".into()));
        }
        for i in 0..self.dim {
            for sign in [1i64, -1] {
                let mut dir = unit(self.dim, i);
                if sign < 0 {
                    dir = dir.iter().map(|v| -v).collect();
                }
                if !self.positive_step(x, &dir)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn positive_step(&self, x: &[Rational], dir: &[Rational]) -> Result<bool> {
        let lp = match self.v.get() {
            Some(v) => {
                // variables: lambda (vertices), mu (rays), t
                let nv = v.vertices.len() + v.rays.len();
                let mut objective = vec![Rational::zero(); nv + 1];
                objective[nv] = -Rational::one();
                let mut lp = LinearProgram::new(objective);
                for i in 0..self.dim {
                    let mut row: Vector = v
                        .vertices
                        .iter()
                        .chain(&v.rays)
                        .map(|g| g[i].clone())
                        .collect();
                    row.push(-dir[i].clone());
                    lp.equal(row, x[i].clone());
                }
                let mut ones = vec![Rational::zero(); nv + 1];
                for o in ones.iter_mut().take(v.vertices.len()) {
                    *o = Rational::one();
                }
                lp.equal(ones, Rational::one());
                let mut cap = vec![Rational::zero(); nv + 1];
                cap[nv] = Rational::one();
                lp.ineq(cap, Rational::one());
                for j in 0..nv {
                    lp.set_sign(j, VarSign::NonNegative);
                }
                lp
            }
            None => {
                let h = self.h.get().expect("one representation");
                let mut lp = LinearProgram::new(vec![-Rational::one()]);
                for r in &h.ineqs {
                    lp.ineq(vec![dot(&r.normal, dir)], r.slack(x));
                }
                for r in &h.eqs {
                    lp.equal(vec![dot(&r.normal, dir)], r.slack(x));
                }
                lp.ineq(vec![Rational::one()], Rational::one());
                lp
            }
        };
        Ok(match solve_lp(&lp)? {
            LpOutcome::Optimal { value, .. } => value.is_negative(),
            LpOutcome::Unbounded { .. } => true,
            LpOutcome::Infeasible { .. } => false,
        })
    }

    pub fn is_empty(&self) -> Result<bool> {
        match self.h.get() {
            Some(h) => h.is_empty(),
            None => Ok(self.v.get().expect("one representation").vertices.is_empty()),
        }
    }

    pub fn is_bounded(&self) -> Result<bool> {
        Ok(self.vrep()?.rays.is_empty())
    }

    /// Chebyshev-style centre: maximizes the common ℓ∞ margin `r <= 1` such
    /// that the box of radius `r` around `x` satisfies every row. Returns the
    /// point and margin when the margin is positive.
    pub fn chebyshev(&self) -> Result<Option<(Point, Rational)>> {
        let h = self.hrep()?;
        if !h.eqs.is_empty() {
            return Ok(None);
        }
        let n = self.dim;
        let mut objective = vec![Rational::zero(); n + 1];
        objective[n] = -Rational::one();
        let mut lp = LinearProgram::new(objective);
        for r in &h.ineqs {
            let mut row = r.normal.clone();
            row.push(norm_l1(&r.normal));
            lp.ineq(row, r.rhs.clone());
        }
        let mut cap = vec![Rational::zero(); n + 1];
        cap[n] = Rational::one();
        lp.ineq(cap, Rational::one());
        match solve_lp(&lp)? {
            LpOutcome::Optimal { point, .. } if point[n].is_positive() => {
                let radius = point[n].clone();
                let mut x = point;
                x.truncate(n);
                Ok(Some((x, radius)))
            }
            _ => Ok(None),
        }
    }

    pub fn interior_point(&self) -> Result<Option<Point>> {
        Ok(self.chebyshev()?.map(|(x, _)| x))
    }

    pub fn negate(&self) -> ConvexSet {
        let h = self.h.get().map(|h| HRep {
            dim: h.dim,
            ineqs: h
                .ineqs
                .iter()
                .map(|r| Row::new(r.normal.iter().map(|x| -x).collect(), r.rhs.clone()))
                .collect(),
            eqs: h
                .eqs
                .iter()
                .map(|r| Row::new(r.normal.iter().map(|x| -x).collect(), r.rhs.clone()))
                .collect(),
        });
        let v = self.v.get().map(|v| VRep {
            dim: v.dim,
            vertices: v.vertices.iter().map(|p| p.iter().map(|x| -x).collect()).collect(),
            rays: v.rays.iter().map(|p| p.iter().map(|x| -x).collect()).collect(),
        });
        self.with_reps(h, v)
    }

    pub fn translate(&self, a: &[Rational]) -> Result<ConvexSet> {
        check_dim(self.dim, a.len())?;
        let shift = |r: &Row| Row::new(r.normal.clone(), &r.rhs + dot(&r.normal, a));
        let h = self.h.get().map(|h| HRep {
            dim: h.dim,
            ineqs: h.ineqs.iter().map(shift).collect(),
            eqs: h.eqs.iter().map(shift).collect(),
        });
        let v = self.v.get().map(|v| VRep {
            dim: v.dim,
            vertices: v
                .vertices
                .iter()
                .map(|p| p.iter().zip(a).map(|(x, y)| x + y).collect())
                .collect(),
            rays: v.rays.clone(),
        });
        Ok(self.with_reps(h, v))
    }

    fn with_reps(&self, h: Option<HRep>, v: Option<VRep>) -> ConvexSet {
        ConvexSet {
            dim: self.dim,
            h: h.map(OnceCell::with_value).unwrap_or_default(),
            v: v.map(OnceCell::with_value).unwrap_or_default(),
        }
    }

    /// `max c·x` over the set.
    pub fn maximize(&self, c: &[Rational]) -> Result<Support> {
        check_dim(self.dim, c.len())?;
        let h = self.hrep()?;
        let lp = h.lp(c.iter().map(|x| -x).collect());
        Ok(match solve_lp(&lp)? {
            LpOutcome::Optimal { point, value, .. } => Support::Attained {
                value: -value,
                point,
            },
            LpOutcome::Unbounded { point, ray } => Support::Unbounded { point, ray },
            LpOutcome::Infeasible { .. } => Support::Empty,
        })
    }

    /// Whether `other ⊆ self`, decided by one support LP over `other` per row
    /// of `self`.
    pub fn contains_set(&self, other: &ConvexSet) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        if other.is_empty()? {
            return Ok(true);
        }
        let h = self.hrep()?;
        let within = |normal: &Vector, rhs: &Rational| -> Result<bool> {
            Ok(match other.maximize(normal)? {
                Support::Attained { value, .. } => value <= *rhs,
                Support::Unbounded { .. } => false,
                Support::Empty => true,
            })
        };
        for r in &h.ineqs {
            if !within(&r.normal, &r.rhs)? {
                return Ok(false);
            }
        }
        for r in &h.eqs {
            let neg: Vector = r.normal.iter().map(|x| -x).collect();
            if !within(&r.normal, &r.rhs)? || !within(&neg, &-r.rhs.clone())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_set(&self, other: &ConvexSet) -> Result<bool> {
        Ok(self.contains_set(other)? && other.contains_set(self)?)
    }
}

/// Result of maximizing a linear functional over a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    Attained { value: Rational, point: Point },
    Unbounded { point: Point, ray: Vector },
    Empty,
}

/// Closed ℓ∞ ball, i.e. the box `center ± radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Point,
    pub radius: Rational,
}

impl Ball {
    pub fn new(center: Point, radius: Rational) -> Result<Ball> {
        if !radius.is_positive() {
            return Err(Error::Input("ball radius must be positive".into()));
        }
        Ok(Ball { center, radius })
    }

    pub fn to_set(&self) -> ConvexSet {
        let lo: Vector = self.center.iter().map(|c| c - &self.radius).collect();
        let hi: Vector = self.center.iter().map(|c| c + &self.radius).collect();
        ConvexSet::boxed(&lo, &hi).expect("matching lengths")
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.iter()
            .zip(&self.center)
            .all(|(a, c)| (a - c).abs() <= self.radius)
    }
}

#[cfg(test)]
mod tests;
