//! Small exact linear-algebra helpers (row reduction, orthogonal projection).

use num_traits::{One, Zero};

use crate::rational::{dot, Rational, Vector};

/// Reduced row echelon form of the span of `rows`, zero rows removed.
/// The result is a canonical basis of the row space.
pub fn rref(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == m.len() {
            break;
        }
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot = m[pivot_row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &factor * y;
                }
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    rref(rows, ncols).len()
}

/// Orthogonal basis (not normalized) of the span of `rows`.
pub fn orthogonal_basis(rows: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for r in rows {
        let v = project_out(r, &basis);
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
        }
    }
    basis
}

/// Removes from `v` its components along an orthogonal basis.
pub fn project_out(v: &[Rational], orthogonal: &[Vector]) -> Vector {
    let mut out = v.to_vec();
    for u in orthogonal {
        let uu = dot(u, u);
        let c = dot(&out, u) / uu;
        if !c.is_zero() {
            for (x, y) in out.iter_mut().zip(u) {
                *x -= &c * y;
            }
        }
    }
    out
}

/// Solves the square system `m * x = b` exactly; `None` when singular.
pub fn solve(m: &[Vector], b: &[Rational]) -> Option<Vector> {
    let n = m.len();
    let mut a: Vec<Vector> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat, vec_of};

    #[test]
    fn rref_is_canonical_for_equal_spans() {
        let a = rref(&[vec_of(&[1, 1, 0]), vec_of(&[0, 1, 1])], 3);
        let b = rref(&[vec_of(&[1, 2, 1]), vec_of(&[2, 2, 0]), vec_of(&[3, 4, 1])], 3);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn projection_is_orthogonal() {
        let basis = orthogonal_basis(&[vec_of(&[1, 1, 0])]);
        let p = project_out(&vec_of(&[2, 0, 5]), &basis);
        assert_eq!(p, vec![int(1), int(-1), int(5)]);
        assert_eq!(dot(&p, &vec_of(&[1, 1, 0])), int(0));
    }

    #[test]
    fn solves_square_systems() {
        let x = solve(&[vec_of(&[2, 1]), vec_of(&[1, 3])], &vec_of(&[3, 5])).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        assert!(solve(&[vec_of(&[1, 2]), vec_of(&[2, 4])], &vec_of(&[1, 1])).is_none());
    }
}
