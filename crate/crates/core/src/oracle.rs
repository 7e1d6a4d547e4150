//! Brute-force oracles and seeded instance generators used to cross-check
//! the LP-based answers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_dim, Error, Result};
use crate::extremality::separate;
use crate::lp::{solve_lp, LinearProgram, VarSign};
use crate::polyhedron::{Ball, ConvexSet, HRep, Row};
use crate::rational::{dot, norm_l1, sub, Functional, Point, Rational, Vector};

/// Points per axis and half width of a cubic grid centred at the query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub dim: usize,
    pub half_width: Rational,
    pub resolution: usize,
}

impl GridSpec {
    pub fn new(dim: usize, half_width: Rational, resolution: usize) -> Result<GridSpec> {
        if dim == 0 || dim > 3 {
            return Err(Error::Capability(format!("grid oracle supports dimensions 1 to 3, got {dim}")));
        }
        if resolution < 3 || resolution.is_multiple_of(2) {
            return Err(Error::Input("grid resolution must be odd and at least 3".into()));
        }
        if (resolution as f64).powi(dim as i32) > 1e6 {
            return Err(Error::Capability("grid exceeds 10^6 points".into()));
        }
        if !half_width.is_positive() {
            return Err(Error::Input("grid half width must be positive".into()));
        }
        Ok(GridSpec {
            dim,
            half_width,
            resolution,
        })
    }

    /// Number of cells from the centre to the edge.
    pub fn cells(&self) -> i64 {
        (self.resolution / 2) as i64
    }

    /// Spacing between neighbouring grid points.
    pub fn step(&self) -> Rational {
        &self.half_width / Rational::from_integer(self.cells().into())
    }
}

/// Integer offsets `k` with `max |k_i| = shell`.
fn shell_offsets(dim: usize, shell: i64) -> Vec<Vec<i64>> {
    let side = 2 * shell + 1;
    let total = (side as usize).pow(dim as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx as i64;
        let mut k = Vec::with_capacity(dim);
        for _ in 0..dim {
            k.push(rest % side - shell);
            rest /= side;
        }
        if k.iter().any(|c| c.abs() == shell) {
            out.push(k);
        }
    }
    out
}

/// One row `a·(x + h k) <= b` rewritten as `Σ g_j k_j <= c` over integers.
struct IntRow {
    g: Vec<i128>,
    c: i128,
}

fn lcm_of_denoms(vals: &[Rational]) -> BigInt {
    vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn integer_rows(h: &HRep, x: &[Rational], step: &Rational) -> Option<Vec<IntRow>> {
    let mut out = Vec::new();
    let rows = h
        .ineqs
        .iter()
        .map(|r| (r, false))
        .chain(h.eqs.iter().map(|r| (r, true)));
    for (r, is_eq) in rows {
        let mut vals: Vec<Rational> = r.normal.iter().map(|a| a * step).collect();
        vals.push(&r.rhs - dot(&r.normal, x));
        let l = Rational::from_integer(lcm_of_denoms(&vals));
        let ints: Option<Vec<i128>> = vals.iter().map(|v| (v * &l).to_integer().to_i128()).collect();
        let ints = ints?;
        let (g, c) = ints.split_at(ints.len() - 1);
        out.push(IntRow {
            g: g.to_vec(),
            c: c[0],
        });
        if is_eq {
            out.push(IntRow {
                g: g.iter().map(|v| -v).collect(),
                c: -c[0],
            });
        }
    }
    Some(out)
}

/// Result of a grid scan around a query point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridScan {
    /// Every point of the first shell lies in the set.
    pub interior: bool,
    /// Number of consecutive shells, counted outwards, fully inside.
    pub full_shells: i64,
}

/// Scans the grid around `x` shell by shell, with H-row membership in exact
/// integer arithmetic. By convexity the first shell lies inside iff the box
/// of radius one step does, so `interior` approximates `x ∈ int s`.
pub fn grid_scan(s: &ConvexSet, x: &[Rational], g: &GridSpec) -> Result<GridScan> {
    check_dim(g.dim, s.dim())?;
    check_dim(g.dim, x.len())?;
    let h = s.hrep()?;
    let step = g.step();
    let Some(rows) = integer_rows(h, x, &step) else {
        let inside = |p: &[Rational]| Ok(h.contains(p));
        return grid_scan_with(g, x, g.cells(), inside);
    };
    let mut full = 0;
    for shell in 1..=g.cells() {
        let ok = shell_offsets(g.dim, shell)
            .iter()
            .all(|k| rows.iter().all(|r| r.g.iter().zip(k).map(|(a, b)| a * *b as i128).sum::<i128>() <= r.c));
        if !ok {
            break;
        }
        full = shell;
    }
    Ok(GridScan {
        interior: full >= 1,
        full_shells: full,
    })
}

/// Grid scan against an arbitrary membership test, up to `max_shells`.
pub fn grid_scan_with<F>(g: &GridSpec, x: &[Rational], max_shells: i64, mut inside: F) -> Result<GridScan>
where
    F: FnMut(&[Rational]) -> Result<bool>,
{
    let step = g.step();
    let mut full = 0;
    'shells: for shell in 1..=max_shells.min(g.cells()) {
        for k in shell_offsets(g.dim, shell) {
            let p: Vector = x
                .iter()
                .zip(&k)
                .map(|(c, o)| c + &step * Rational::from_integer((*o).into()))
                .collect();
            if !inside(&p)? {
                break 'shells;
            }
        }
        full = shell;
    }
    Ok(GridScan {
        interior: full >= 1,
        full_shells: full,
    })
}

pub fn grid_interior_oracle(s: &ConvexSet, x: &[Rational], g: &GridSpec) -> Result<bool> {
    Ok(grid_scan(s, x, g)?.interior)
}

/// Exact ℓ∞ depth of `x` in `s`: `min (b - a·x) / ‖a‖₁` over rows, zero on
/// the boundary, negative outside; `None` for the whole space.
pub fn linf_depth(h: &HRep, x: &[Rational]) -> Option<Rational> {
    if !h.eqs.is_empty() {
        let off = h.eqs.iter().any(|r| !r.slack(x).is_zero());
        return Some(if off { -Rational::one() } else { Rational::zero() });
    }
    h.ineqs.iter().map(|r| r.slack(x) / norm_l1(&r.normal)).min()
}

/// Comparison outcome of the grid oracle against a claimed interior verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridCheck {
    Agree,
    Disagree,
    /// The point lies strictly inside but closer to the boundary than one
    /// grid step, where a grid cannot decide.
    Skipped,
}

/// Checks a claimed verdict on `0 ∈ int(Ω1 - Ω2)` with the grid oracle,
/// deciding membership of grid points in the difference by a lifted LP over
/// the H-descriptions of the two sets (no Minkowski sum involved). The guard
/// band uses the exact depth `depth` of the origin in the difference.
pub fn grid_check_difference(
    s1: &ConvexSet,
    s2: &ConvexSet,
    g: &GridSpec,
    depth: Option<&Rational>,
    claimed_interior: bool,
) -> Result<GridCheck> {
    if let Some(d) = depth {
        if d.is_positive() && *d < g.step() {
            return Ok(GridCheck::Skipped);
        }
    }
    let origin = vec![Rational::zero(); g.dim];
    let scan = grid_scan_with(g, &origin, 1, |z| in_difference(s1, s2, z))?;
    Ok(if scan.interior == claimed_interior {
        GridCheck::Agree
    } else {
        GridCheck::Disagree
    })
}

/// `z ∈ Ω1 - Ω2` by LP in `(x1, x2)`.
pub fn in_difference(s1: &ConvexSet, s2: &ConvexSet, z: &[Rational]) -> Result<bool> {
    let n = s1.dim();
    let (h1, h2) = (s1.hrep()?, s2.hrep()?);
    let mut lp = LinearProgram::feasibility(2 * n);
    let lift = |normal: &Vector, first: bool| {
        let mut row = vec![Rational::zero(); 2 * n];
        let off = if first { 0 } else { n };
        row[off..off + n].clone_from_slice(normal);
        row
    };
    for (h, first) in [(h1, true), (h2, false)] {
        for r in &h.ineqs {
            lp.ineq(lift(&r.normal, first), r.rhs.clone());
        }
        for r in &h.eqs {
            lp.equal(lift(&r.normal, first), r.rhs.clone());
        }
    }
    for i in 0..n {
        let mut row = vec![Rational::zero(); 2 * n];
        row[i] = Rational::one();
        row[n + i] = -Rational::one();
        lp.equal(row, z[i].clone());
    }
    Ok(solve_lp(&lp)?.is_optimal())
}

/// `max ⟨x*, v⟩` over the vertices of a bounded set.
pub fn vertex_support_oracle(s: &ConvexSet, xstar: &[Rational]) -> Result<Rational> {
    check_dim(s.dim(), xstar.len())?;
    let v = s.vrep()?;
    if !v.rays.is_empty() {
        return Err(Error::Precondition("vertex support oracle needs a bounded set".into()));
    }
    v.vertices
        .iter()
        .map(|p| dot(xstar, p))
        .max()
        .ok_or_else(|| Error::Precondition("vertex support oracle needs a nonempty set".into()))
}

/// `⟨x*, x - x̄⟩ <= 0` on every vertex and `⟨x*, r⟩ <= 0` on every ray.
pub fn definition_normal_cone_oracle(s: &ConvexSet, xbar: &[Rational], candidate: &[Rational]) -> Result<bool> {
    check_dim(s.dim(), candidate.len())?;
    if !s.contains_point(xbar)? {
        return Err(Error::Precondition("normal cone oracle needs a point of the set".into()));
    }
    let v = s.vrep()?;
    Ok(v.vertices
        .iter()
        .all(|p| !dot(candidate, &sub(p, xbar)).is_positive())
        && v.rays.iter().all(|r| !dot(candidate, r).is_positive()))
}

/// Shape of a generated pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Independent random rows through or near the common point.
    Generic,
    /// The sets lie on opposite sides of a hyperplane through the point.
    Separated,
    /// The second set is cut down by an equality through the point.
    Flat,
    /// Axis boxes around the point, often touching.
    Boxes,
}

/// Generator seed for a (seed, dim, rows) triple.
fn stream(seed: u64, dim: usize, rows: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ ((dim as u64) << 48) ^ ((rows as u64) << 40))
}

fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

fn random_normal(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    loop {
        let v: Vector = (0..dim)
            .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

fn random_slack(rng: &mut ChaCha8Rng) -> Rational {
    const SLACKS: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (2, 1), (3, 1)];
    // slack 0 twice as likely, so pairs often touch
    let i = rng.gen_range(0..6usize).saturating_sub(1);
    let (p, q) = SLACKS[i];
    Rational::new(p.into(), q.into())
}

fn row_through(rng: &mut ChaCha8Rng, p: &[Rational]) -> Row {
    let a = random_normal(rng, p.len());
    let rhs = dot(&a, p) + random_slack(rng);
    Row::new(a, rhs)
}

fn bounding_box(rng: &mut ChaCha8Rng, p: &[Rational]) -> Vec<Row> {
    let mut rows = Vec::new();
    for i in 0..p.len() {
        let lo = Rational::from_integer(rng.gen_range(0i64..=2).into());
        let hi = Rational::from_integer(rng.gen_range(0i64..=2).into());
        let mut e = vec![Rational::zero(); p.len()];
        e[i] = Rational::one();
        rows.push(Row::new(e.clone(), &p[i] + hi));
        e[i] = -Rational::one();
        rows.push(Row::new(e, -(&p[i] - lo)));
    }
    rows
}

/// Deterministic pseudo-random pair of H-polyhedra sharing a rational point.
pub fn random_pair_with_common_point(seed: u64, dim: usize, rows: usize) -> Result<(ConvexSet, ConvexSet, Point)> {
    Ok(random_pair_with_mode(seed, dim, rows)?.0)
}

/// As [`random_pair_with_common_point`], also reporting the pair's shape.
#[allow(clippy::type_complexity)]
pub fn random_pair_with_mode(seed: u64, dim: usize, rows: usize) -> Result<((ConvexSet, ConvexSet, Point), PairMode)> {
    if dim == 0 || dim > 4 || rows == 0 || rows > 12 {
        return Err(Error::Input(format!(
            "generator supports dims 1..=4 and rows 1..=12, got dim {dim} rows {rows}"
        )));
    }
    let mut rng = stream(seed, dim, rows);
    let p: Point = (0..dim).map(|_| small_rational(&mut rng, 4, 2)).collect();
    let mode = match rng.gen_range(0..8u32) {
        0..=2 => PairMode::Generic,
        3 | 4 => PairMode::Separated,
        5 => PairMode::Flat,
        _ => PairMode::Boxes,
    };
    let mut r1: Vec<Row> = Vec::new();
    let mut r2: Vec<Row> = Vec::new();
    let mut e2: Vec<Row> = Vec::new();
    match mode {
        PairMode::Boxes => {
            r1 = bounding_box(&mut rng, &p);
            r2 = bounding_box(&mut rng, &p);
        }
        _ => {
            if mode == PairMode::Separated {
                let a = random_normal(&mut rng, dim);
                let b = dot(&a, &p);
                r1.push(Row::new(a.iter().map(|x| -x).collect(), -b.clone()));
                r2.push(Row::new(a, b));
            }
            if mode == PairMode::Flat {
                let a = random_normal(&mut rng, dim);
                let b = dot(&a, &p);
                e2.push(Row::new(a, b));
            }
            while r1.len() < rows {
                r1.push(row_through(&mut rng, &p));
            }
            while r2.len() < rows {
                r2.push(row_through(&mut rng, &p));
            }
            if rng.gen_bool(0.5) {
                r1.extend(bounding_box(&mut rng, &p));
            }
        }
    }
    let s1 = ConvexSet::from_hrep(HRep::new(dim, r1, Vec::new())?);
    let s2 = ConvexSet::from_hrep(HRep::new(dim, r2, e2)?);
    debug_assert!(s1.contains_point(&p)? && s2.contains_point(&p)?);
    Ok(((s1, s2, p), mode))
}

/// A generated instance with its provenance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub set1: ConvexSet,
    pub set2: ConvexSet,
    pub point: Option<Point>,
}

/// Corpus for seeds `seeds`, cycling dimensions through `dims` and using
/// two to four random rows per set.
pub fn corpus(seeds: std::ops::RangeInclusive<u64>, dims: &[usize]) -> Result<Vec<Instance>> {
    if dims.is_empty() {
        return Err(Error::Input("at least one dimension is required".into()));
    }
    seeds
        .map(|seed| {
            let dim = dims[(seed as usize) % dims.len()];
            let rows = 2 + (seed as usize / dims.len()) % 3;
            let (s1, s2, p) = random_pair_with_common_point(seed, dim, rows)?;
            Ok(Instance {
                name: format!("seed-{seed}-dim-{dim}"),
                set1: s1,
                set2: s2,
                point: Some(p),
            })
        })
        .collect()
}

/// Random bounded polytope: a box around a random centre cut by a few rows
/// through the centre's neighbourhood.
pub fn random_polytope(seed: u64, dim: usize) -> Result<ConvexSet> {
    let mut rng = stream(seed, dim, 0);
    let c: Point = (0..dim).map(|_| small_rational(&mut rng, 4, 2)).collect();
    let mut rows: Vec<Row> = (0..dim)
        .flat_map(|i| {
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::one();
            let neg_e: Vector = e.iter().map(|x| -x).collect();
            let two = Rational::from_integer(2.into());
            [Row::new(e, &c[i] + &two), Row::new(neg_e, -(&c[i] - &two))]
        })
        .collect();
    for _ in 0..rng.gen_range(1..=3) {
        let a = random_normal(&mut rng, dim);
        let rhs = dot(&a, &c) + Rational::new(rng.gen_range(1i64..=4).into(), 2.into());
        rows.push(Row::new(a, rhs));
    }
    Ok(ConvexSet::from_hrep(HRep::new(dim, rows, Vec::new())?))
}

/// A boundary point of `s`: a rational convex combination of the vertices of
/// a random facet.
pub fn random_boundary_point(s: &ConvexSet, seed: u64) -> Result<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = s.hrep()?.canonicalize()?;
    let v = s.vrep()?;
    if h.ineqs.is_empty() || v.vertices.is_empty() {
        return Err(Error::Precondition("set has no facet".into()));
    }
    let facet = &h.ineqs[rng.gen_range(0..h.ineqs.len())];
    let on: Vec<&Point> = v.vertices.iter().filter(|p| facet.slack(p).is_zero()).collect();
    let weights: Vec<i64> = on.iter().map(|_| rng.gen_range(0..=4)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        return Ok(on[0].clone());
    }
    let mut x = vec![Rational::zero(); s.dim()];
    for (p, w) in on.iter().zip(&weights) {
        let w = Rational::new((*w).into(), total.into());
        for (xi, pi) in x.iter_mut().zip(p.iter()) {
            *xi += &w * pi;
        }
    }
    Ok(x)
}

/// Splits `x* ∈ N(x̄; Ω1 ∩ Ω2 ∩ V)` through the epigraphical pair
/// `Θ1 = Ω1 × [0, ∞)`, `Θ2 = {(x, μ) : x ∈ Ω2 ∩ V, μ <= ⟨x*, x - x̄⟩}` in
/// one dimension higher, with `V = Ball(x̄, radius)`. Separating the pair
/// gives `(y*, γ)` with `γ < 0`, and `x* = (-y*/γ) + (x* + y*/γ)` with the
/// parts in `N(x̄; Ω1)` and `N(x̄; Ω2 ∩ V)`. Returns `None` when the
/// separation does not have `γ < 0`.
pub fn epigraph_decomposition(
    s1: &ConvexSet,
    s2: &ConvexSet,
    xbar: &[Rational],
    xstar: &[Rational],
    radius: &Rational,
) -> Result<Option<(Functional, Functional)>> {
    let n = s1.dim();
    let lift = |r: &Row, last: Rational| {
        let mut a = r.normal.clone();
        a.push(last);
        Row::new(a, r.rhs.clone())
    };
    let h1 = s1.hrep()?;
    let mut t1: Vec<Row> = h1.ineqs.iter().map(|r| lift(r, Rational::zero())).collect();
    let mut down = vec![Rational::zero(); n + 1];
    down[n] = -Rational::one();
    t1.push(Row::new(down, Rational::zero()));
    let theta1 = ConvexSet::from_hrep(HRep::new(
        n + 1,
        t1,
        h1.eqs.iter().map(|r| lift(r, Rational::zero())).collect(),
    )?);

    let local = crate::polyhedron::intersect(s2, &Ball::new(xbar.to_vec(), radius.clone())?.to_set())?;
    let h2 = local.hrep()?;
    let mut t2: Vec<Row> = h2.ineqs.iter().map(|r| lift(r, Rational::zero())).collect();
    let mut cap: Vector = xstar.iter().map(|x| -x).collect();
    cap.push(Rational::one());
    t2.push(Row::new(cap, -dot(xstar, xbar)));
    let theta2 = ConvexSet::from_hrep(HRep::new(
        n + 1,
        t2,
        h2.eqs.iter().map(|r| lift(r, Rational::zero())).collect(),
    )?);

    let Some(sep) = separate(&theta1, &theta2)? else {
        return Ok(None);
    };
    let gamma = sep.functional[n].clone();
    if !gamma.is_negative() {
        return Ok(None);
    }
    let ystar = &sep.functional[..n];
    let first: Functional = ystar.iter().map(|y| -(y / &gamma)).collect();
    let second: Functional = xstar.iter().zip(&first).map(|(x, f)| x - f).collect();
    Ok(Some((first, second)))
}

/// Small random LP: 2 to 5 variables, 2 to 7 rows with integer entries in
/// `[-5, 5]`, occasional equality rows and sign restrictions. The mix
/// produces optimal, infeasible and unbounded instances.
pub fn random_lp(seed: u64) -> LinearProgram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1b_2c_3d);
    let n = rng.gen_range(2..=5usize);
    let entry = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(-5i64..=5).into());
    let objective: Vector = (0..n).map(|_| entry(&mut rng)).collect();
    let mut lp = LinearProgram::new(objective);
    for _ in 0..rng.gen_range(2..=7usize) {
        let row: Vector = (0..n).map(|_| entry(&mut rng)).collect();
        let rhs = entry(&mut rng);
        if rng.gen_range(0..5) == 0 {
            lp.equal(row, rhs);
        } else {
            lp.ineq(row, rhs);
        }
    }
    for j in 0..n {
        if rng.gen_bool(0.5) {
            lp.set_sign(j, VarSign::NonNegative);
        }
    }
    lp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::normal_cone;
    use crate::rational::{int, rat, vec_of};

    fn square() -> ConvexSet {
        ConvexSet::boxed(&vec_of(&[0, 0]), &vec_of(&[1, 1])).unwrap()
    }

    #[test]
    fn grid_on_square() {
        let g = GridSpec::new(2, rat(1, 4), 41).unwrap();
        assert!(grid_interior_oracle(&square(), &[rat(1, 2), rat(1, 2)], &g).unwrap());
        assert!(!grid_interior_oracle(&square(), &vec_of(&[0, 0]), &g).unwrap());
        let scan = grid_scan(&square(), &[rat(1, 2), rat(1, 2)], &g).unwrap();
        assert_eq!(scan.full_shells, 20);
    }

    #[test]
    fn grid_spec_limits() {
        assert!(GridSpec::new(4, int(1), 3).is_err());
        assert!(GridSpec::new(3, int(1), 401).is_err());
        assert!(GridSpec::new(2, int(1), 400).is_err());
    }

    #[test]
    fn vertex_support() {
        assert_eq!(vertex_support_oracle(&square(), &vec_of(&[1, 1])).unwrap(), int(2));
        let tri = ConvexSet::from_vrep(
            crate::polyhedron::VRep::new(2, vec![vec_of(&[0, 0]), vec_of(&[1, 0]), vec_of(&[0, 1])], vec![]).unwrap(),
        );
        assert_eq!(vertex_support_oracle(&tri, &vec_of(&[1, 1])).unwrap(), int(1));
    }

    #[test]
    fn normal_cone_definition() {
        let o = vec_of(&[0, 0]);
        assert!(definition_normal_cone_oracle(&square(), &o, &vec_of(&[-1, -1])).unwrap());
        assert!(!definition_normal_cone_oracle(&square(), &o, &vec_of(&[1, 0])).unwrap());
    }

    #[test]
    fn generator_is_deterministic_and_shares_point() {
        for seed in 1..=40 {
            let (a, b, p) = random_pair_with_common_point(seed, 2 + (seed as usize % 3), 3).unwrap();
            assert!(a.contains_point(&p).unwrap() && b.contains_point(&p).unwrap());
            let (a2, _, p2) = random_pair_with_common_point(seed, 2 + (seed as usize % 3), 3).unwrap();
            assert_eq!(p, p2);
            assert_eq!(a.hrep().unwrap(), a2.hrep().unwrap());
        }
    }

    #[test]
    fn epigraph_split_on_overlapping_boxes() {
        let a = square();
        let c = ConvexSet::boxed(&[rat(1, 2), int(0)], &[rat(3, 2), int(1)]).unwrap();
        let xbar = vec![int(1), int(0)];
        let xstar = vec_of(&[0, -1]);
        let (u, v) = epigraph_decomposition(&a, &c, &xbar, &xstar, &int(1)).unwrap().unwrap();
        assert!(normal_cone(&a, &xbar).unwrap().contains(&u).unwrap());
        assert!(normal_cone(&c, &xbar).unwrap().contains(&v).unwrap());
    }
}
