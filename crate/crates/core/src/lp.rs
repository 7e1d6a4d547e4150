//! Certified exact linear programming.
//!
//! Problems are stated as
//!
//! ```text
//! minimize    c·x
//! subject to  A x <= b      (inequality rows)
//!             E x  = f      (equality rows)
//!             x_j >= 0      for variables marked NonNegative
//! ```
//!
//! and solved by a dense two-phase simplex over [`Rational`] with Bland's
//! smallest-index rule. Every outcome carries a certificate that
//! [`verify_certificate`] re-checks with exact arithmetic:
//!
//! * `Optimal`: a dual vector `(y, z)`, `y >= 0`, with `c + Aᵀy + Eᵀz`
//!   vanishing on free variables and nonnegative on sign-restricted ones, and
//!   `c·x = -(b·y + f·z)`.
//! * `Infeasible`: a Farkas vector `(y, z)`, `y >= 0`, with the same sign
//!   pattern on `Aᵀy + Eᵀz` and `b·y + f·z < 0` (normalized to `-1`).
//! * `Unbounded`: a feasible point and a recession direction with negative
//!   objective slope.
//!
//! Dual and Farkas vectors list inequality rows first, then equality rows.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{dot, fmt_rational, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarSign {
    Free,
    NonNegative,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearProgram {
    pub objective: Vector,
    pub ineq_lhs: Vec<Vector>,
    pub ineq_rhs: Vector,
    pub eq_lhs: Vec<Vector>,
    pub eq_rhs: Vector,
    /// `None` means every variable is free.
    pub var_signs: Option<Vec<VarSign>>,
}

impl LinearProgram {
    pub fn new(objective: Vector) -> Self {
        LinearProgram {
            objective,
            ..Default::default()
        }
    }

    /// Pure feasibility problem in `n` variables.
    pub fn feasibility(n: usize) -> Self {
        Self::new(vec![Rational::zero(); n])
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn ineq(&mut self, lhs: Vector, rhs: Rational) -> &mut Self {
        self.ineq_lhs.push(lhs);
        self.ineq_rhs.push(rhs);
        self
    }

    pub fn equal(&mut self, lhs: Vector, rhs: Rational) -> &mut Self {
        self.eq_lhs.push(lhs);
        self.eq_rhs.push(rhs);
        self
    }

    pub fn set_sign(&mut self, var: usize, sign: VarSign) -> &mut Self {
        let n = self.num_vars();
        let signs = self
            .var_signs
            .get_or_insert_with(|| vec![VarSign::Free; n]);
        signs[var] = sign;
        self
    }

    pub fn sign(&self, var: usize) -> VarSign {
        self.var_signs
            .as_ref()
            .map_or(VarSign::Free, |s| s[var])
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.ineq_lhs.len() != self.ineq_rhs.len() {
            return Err(Error::Input(format!(
                "{} inequality rows but {} right-hand sides",
                self.ineq_lhs.len(),
                self.ineq_rhs.len()
            )));
        }
        if self.eq_lhs.len() != self.eq_rhs.len() {
            return Err(Error::Input(format!(
                "{} equality rows but {} right-hand sides",
                self.eq_lhs.len(),
                self.eq_rhs.len()
            )));
        }
        for row in self.ineq_lhs.iter().chain(&self.eq_lhs) {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if let Some(signs) = &self.var_signs {
            if signs.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: signs.len(),
                });
            }
        }
        Ok(())
    }

    fn num_rows(&self) -> usize {
        self.ineq_lhs.len() + self.eq_lhs.len()
    }

    fn row(&self, r: usize) -> (&Vector, &Rational) {
        let m = self.ineq_lhs.len();
        if r < m {
            (&self.ineq_lhs[r], &self.ineq_rhs[r])
        } else {
            (&self.eq_lhs[r - m], &self.eq_rhs[r - m])
        }
    }

    /// Exact feasibility of a point.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let signs_ok = (0..x.len())
            .all(|j| self.sign(j) == VarSign::Free || !x[j].is_negative());
        signs_ok
            && self
                .ineq_lhs
                .iter()
                .zip(&self.ineq_rhs)
                .all(|(a, b)| dot(a, x) <= *b)
            && self
                .eq_lhs
                .iter()
                .zip(&self.eq_rhs)
                .all(|(a, b)| dot(a, x) == *b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        point: Vector,
        value: Rational,
        dual: Vector,
    },
    Infeasible {
        farkas: Vector,
    },
    Unbounded {
        point: Vector,
        ray: Vector,
    },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, LpOutcome::Unbounded { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Some(point),
            LpOutcome::Infeasible { .. } => None,
        }
    }
}

/// Computes `Aᵀy + Eᵀz` for a stacked multiplier vector.
fn combine_rows(lp: &LinearProgram, mult: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); lp.num_vars()];
    for (r, w) in mult.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let (a, _) = lp.row(r);
        for (o, x) in out.iter_mut().zip(a) {
            *o += w * x;
        }
    }
    out
}

fn rhs_combination(lp: &LinearProgram, mult: &[Rational]) -> Rational {
    mult.iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (r, w)| acc + w * lp.row(r).1)
}

/// Sign pattern shared by dual and Farkas vectors: `y >= 0` on inequality
/// rows, and `g = base + Aᵀy + Eᵀz` zero on free variables, `>= 0` otherwise.
fn multipliers_admissible(lp: &LinearProgram, mult: &[Rational], base: &[Rational]) -> bool {
    if mult.len() != lp.num_rows() {
        return false;
    }
    if mult[..lp.ineq_lhs.len()].iter().any(Signed::is_negative) {
        return false;
    }
    let g: Vector = combine_rows(lp, mult)
        .iter()
        .zip(base)
        .map(|(x, c)| x + c)
        .collect();
    g.iter().enumerate().all(|(j, v)| match lp.sign(j) {
        VarSign::Free => v.is_zero(),
        VarSign::NonNegative => !v.is_negative(),
    })
}

/// Checks the certificate algebra of `out` against `lp` exactly.
pub fn verify_certificate(lp: &LinearProgram, out: &LpOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    let n = lp.num_vars();
    match out {
        LpOutcome::Optimal { point, value, dual } => {
            lp.is_feasible(point)
                && dot(&lp.objective, point) == *value
                && multipliers_admissible(lp, dual, &lp.objective)
                && -rhs_combination(lp, dual) == *value
        }
        LpOutcome::Infeasible { farkas } => {
            multipliers_admissible(lp, farkas, &vec![Rational::zero(); n])
                && rhs_combination(lp, farkas).is_negative()
        }
        LpOutcome::Unbounded { point, ray } => {
            if ray.len() != n || !lp.is_feasible(point) {
                return false;
            }
            let signs_ok = (0..n).all(|j| lp.sign(j) == VarSign::Free || !ray[j].is_negative());
            signs_ok
                && lp.ineq_lhs.iter().all(|a| !dot(a, ray).is_positive())
                && lp.eq_lhs.iter().all(|a| dot(a, ray).is_zero())
                && dot(&lp.objective, ray).is_negative()
        }
    }
}

/// Solves `lp` exactly. Deterministic: equal inputs give equal outcomes.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    Ok(Simplex::build(lp).run(lp))
}

/// Convenience wrapper for `maximize c·x`; the returned value is the maximum
/// (the certificate inside still refers to the minimization of `-c·x`).
pub fn maximize(lp: &LinearProgram) -> Result<(LinearProgram, LpOutcome)> {
    let mut neg = lp.clone();
    neg.objective = lp.objective.iter().map(|x| -x).collect();
    let out = solve_lp(&neg)?;
    Ok((neg, out))
}

struct Simplex {
    /// Each row holds `ncols` coefficients followed by the right-hand side.
    rows: Vec<Vector>,
    /// Reduced costs, last entry is minus the current objective value.
    obj: Vector,
    basis: Vec<usize>,
    ncols: usize,
    /// (original variable, +1/-1) for each structural column.
    structural: Vec<(usize, i8)>,
    first_artificial: usize,
    /// Column that formed the starting identity basis for each row.
    init_col: Vec<usize>,
    /// +1 when the row was kept, -1 when it was negated to make rhs >= 0.
    row_sign: Vec<i8>,
}

impl Simplex {
    fn build(lp: &LinearProgram) -> Simplex {
        let n = lp.num_vars();
        let m_ineq = lp.ineq_lhs.len();
        let m = lp.num_rows();

        let mut structural = Vec::new();
        for j in 0..n {
            structural.push((j, 1));
            if lp.sign(j) == VarSign::Free {
                structural.push((j, -1));
            }
        }
        let n_struct = structural.len();
        let slack0 = n_struct;
        let first_artificial = slack0 + m_ineq;

        let row_sign: Vec<i8> = (0..m)
            .map(|r| if lp.row(r).1.is_negative() { -1 } else { 1 })
            .collect();
        let needs_art: Vec<bool> = (0..m)
            .map(|r| r >= m_ineq || row_sign[r] < 0)
            .collect();
        let n_art = needs_art.iter().filter(|&&b| b).count();
        let ncols = first_artificial + n_art;

        let mut rows = Vec::with_capacity(m);
        let mut init_col = Vec::with_capacity(m);
        let mut next_art = first_artificial;
        for r in 0..m {
            let (a, b) = lp.row(r);
            let s = Rational::from_integer(row_sign[r].into());
            let mut row = vec![Rational::zero(); ncols + 1];
            for (col, &(j, sg)) in structural.iter().enumerate() {
                if !a[j].is_zero() {
                    let v = &a[j] * &s;
                    row[col] = if sg > 0 { v } else { -v };
                }
            }
            if r < m_ineq {
                row[slack0 + r] = s.clone();
            }
            row[ncols] = b * &s;
            if needs_art[r] {
                row[next_art] = Rational::one();
                init_col.push(next_art);
                next_art += 1;
            } else {
                init_col.push(slack0 + r);
            }
            rows.push(row);
        }
        let basis = init_col.clone();
        Simplex {
            rows,
            obj: vec![Rational::zero(); ncols + 1],
            basis,
            ncols,
            structural,
            first_artificial,
            init_col,
            row_sign,
        }
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        let mut obj: Vector = costs.to_vec();
        obj.push(Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (o, t) in obj.iter_mut().zip(&self.rows[r]) {
                *o -= cb * t;
            }
        }
        self.obj = obj;
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !self.obj[j].is_zero() {
            let f = self.obj[j].clone();
            for (x, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = j;
        if log::log_enabled!(log::Level::Trace) {
            log::trace!("pivot row {r} col {j}\n{}", self.dump());
        }
    }

    fn dump(&self) -> String {
        let mut s = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(fmt_rational).collect();
            s.push_str(&format!("  x{:<3}| {}\n", self.basis[r], cells.join(" ")));
        }
        let cells: Vec<String> = self.obj.iter().map(fmt_rational).collect();
        s.push_str(&format!("  obj | {}\n", cells.join(" ")));
        s
    }

    /// Runs Bland's rule over columns below `limit`. Returns the entering
    /// column of an unbounded direction, or `None` at optimality.
    fn iterate(&mut self, limit: usize) -> Option<usize> {
        loop {
            let entering = (0..limit).find(|&j| self.obj[j].is_negative())?;
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[entering].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[entering];
                let better = match &best {
                    None => true,
                    Some((br, bq)) => {
                        ratio < *bq || (ratio == *bq && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, entering),
                None => return Some(entering),
            }
        }
    }

    fn basic_solution(&self) -> Vector {
        let mut x = vec![Rational::zero(); self.ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = self.rows[r][self.ncols].clone();
        }
        x
    }

    fn to_original(&self, std: &[Rational], n: usize) -> Vector {
        let mut x = vec![Rational::zero(); n];
        for (col, &(j, sg)) in self.structural.iter().enumerate() {
            if sg > 0 {
                x[j] += &std[col];
            } else {
                x[j] -= &std[col];
            }
        }
        x
    }

    /// Row multipliers `pi` of the current basis, read off the reduced costs
    /// of the starting identity columns.
    fn row_prices(&self, costs: &[Rational]) -> Vector {
        self.init_col
            .iter()
            .map(|&c| &costs[c] - &self.obj[c])
            .collect()
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        let n = lp.num_vars();
        let m = self.rows.len();

        if self.first_artificial < self.ncols {
            let mut phase1 = vec![Rational::zero(); self.ncols];
            for c in phase1.iter_mut().skip(self.first_artificial) {
                *c = Rational::one();
            }
            self.set_costs(&phase1);
            // The phase-one objective is bounded below by zero.
            let _ = self.iterate(self.ncols);
            let infeasibility = -self.obj[self.ncols].clone();
            if infeasibility.is_positive() {
                let pi = self.row_prices(&phase1);
                let farkas = (0..m)
                    .map(|r| {
                        let y = &pi[r] / &infeasibility;
                        if self.row_sign[r] > 0 {
                            -y
                        } else {
                            y
                        }
                    })
                    .collect();
                return LpOutcome::Infeasible { farkas };
            }
            for r in 0..m {
                if self.basis[r] < self.first_artificial {
                    continue;
                }
                if let Some(j) = (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                    self.pivot(r, j);
                }
            }
        }

        let mut phase2 = vec![Rational::zero(); self.ncols];
        for (col, &(j, sg)) in self.structural.iter().enumerate() {
            phase2[col] = if sg > 0 {
                lp.objective[j].clone()
            } else {
                -lp.objective[j].clone()
            };
        }
        self.set_costs(&phase2);
        let limit = self.first_artificial;
        if let Some(entering) = self.iterate(limit) {
            let point = self.to_original(&self.basic_solution(), n);
            let mut dir = vec![Rational::zero(); self.ncols];
            dir[entering] = Rational::one();
            for (r, &b) in self.basis.iter().enumerate() {
                dir[b] = -self.rows[r][entering].clone();
            }
            let ray = self.to_original(&dir, n);
            return LpOutcome::Unbounded { point, ray };
        }
        let point = self.to_original(&self.basic_solution(), n);
        let value = dot(&lp.objective, &point);
        let pi = self.row_prices(&phase2);
        let dual = (0..m)
            .map(|r| {
                if self.row_sign[r] > 0 {
                    -pi[r].clone()
                } else {
                    pi[r].clone()
                }
            })
            .collect();
        LpOutcome::Optimal { point, value, dual }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, vec_of};

    fn unit_box_lp() -> LinearProgram {
        let mut lp = LinearProgram::new(vec_of(&[-1, -1]));
        lp.ineq(vec_of(&[1, 0]), int(1))
            .ineq(vec_of(&[0, 1]), int(1))
            .ineq(vec_of(&[-1, 0]), int(0))
            .ineq(vec_of(&[0, -1]), int(0));
        lp
    }

    #[test]
    fn box_vertex_is_optimal() {
        let lp = unit_box_lp();
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Optimal { point, value, .. } => {
                assert_eq!(point, &vec_of(&[1, 1]));
                assert_eq!(value, &int(-2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_certificate(&lp, &out));
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let mut lp = LinearProgram::new(vec_of(&[1]));
        lp.ineq(vec_of(&[1]), int(-1)).ineq(vec_of(&[-1]), int(0));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(
            out,
            LpOutcome::Infeasible {
                farkas: vec_of(&[1, 1])
            }
        );
        assert!(verify_certificate(&lp, &out));
    }

    #[test]
    fn free_direction_is_unbounded() {
        let mut lp = LinearProgram::new(vec_of(&[-1]));
        lp.ineq(vec_of(&[-1]), int(0));
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Unbounded { ray, .. } => assert_eq!(ray, &vec_of(&[1])),
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_certificate(&lp, &out));
    }

    #[test]
    fn forged_value_is_rejected() {
        let lp = unit_box_lp();
        let out = solve_lp(&lp).unwrap();
        let LpOutcome::Optimal { point, dual, .. } = out else {
            panic!()
        };
        let forged = LpOutcome::Optimal {
            point,
            value: int(-3),
            dual,
        };
        assert!(!verify_certificate(&lp, &forged));
    }

    #[test]
    fn malformed_dimensions_are_input_errors() {
        let mut lp = LinearProgram::new(vec_of(&[1, 1]));
        lp.ineq(vec_of(&[1]), int(0));
        assert!(matches!(solve_lp(&lp), Err(Error::Dimension { .. })));
        let mut lp = LinearProgram::new(vec_of(&[1]));
        lp.ineq_lhs.push(vec_of(&[1]));
        assert!(matches!(solve_lp(&lp), Err(Error::Input(_))));
        assert!(!verify_certificate(
            &lp,
            &LpOutcome::Infeasible { farkas: vec![] }
        ));
    }

    #[test]
    fn equalities_and_redundant_rows() {
        // x + y = 1, 2x + 2y = 2 (redundant), x - y = 0; minimize x.
        let mut lp = LinearProgram::new(vec_of(&[1, 0]));
        lp.equal(vec_of(&[1, 1]), int(1))
            .equal(vec_of(&[2, 2]), int(2))
            .equal(vec_of(&[1, -1]), int(0));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.value(), Some(&crate::rational::rat(1, 2)));
        assert!(verify_certificate(&lp, &out));
    }

    #[test]
    fn zero_objective_is_a_feasibility_test() {
        let mut lp = LinearProgram::feasibility(2);
        lp.ineq(vec_of(&[1, 1]), int(-2))
            .set_sign(0, VarSign::NonNegative)
            .set_sign(1, VarSign::NonNegative);
        let out = solve_lp(&lp).unwrap();
        assert!(out.is_infeasible());
        assert!(verify_certificate(&lp, &out));

        let mut lp = LinearProgram::feasibility(2);
        lp.ineq(vec_of(&[1, 1]), int(2));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.value(), Some(&int(0)));
        assert!(verify_certificate(&lp, &out));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, known to cycle under the textbook largest-coefficient rule.
        use crate::rational::rat;
        let mut lp = LinearProgram::new(vec![rat(-3, 4), int(150), rat(-1, 50), int(6)]);
        lp.ineq(vec![rat(1, 4), int(-60), rat(-1, 25), int(9)], int(0))
            .ineq(vec![rat(1, 2), int(-90), rat(-1, 50), int(3)], int(0))
            .ineq(vec![int(0), int(0), int(1), int(0)], int(1));
        for j in 0..4 {
            lp.set_sign(j, VarSign::NonNegative);
        }
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.value(), Some(&rat(-1, 20)));
        assert!(verify_certificate(&lp, &out));
    }
}
