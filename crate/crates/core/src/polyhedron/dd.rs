//! Double description method over the integers.
//!
//! Computes a minimal generating system (lineality basis plus extreme rays) of
//! a polyhedral cone `{y : a·y <= 0 for a in ineqs, e·y = 0 for e in eqs}`.
//! Constraints are processed one at a time; the lineality space is cut down
//! first, after which rays are split into the usual `+ / 0 / -` classes and
//! adjacent pairs are combined. Adjacency uses the combinatorial test with a
//! popcount pre-filter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<BigInt>,
    zero: Bits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn fill_below(&mut self, k: usize) {
        for i in 0..k {
            self.set(i);
        }
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// `|alpha| * v - sign(alpha) * beta * pivot`, which is orthogonal to the row
/// whenever `alpha = row·pivot` and `beta = row·v`.
fn eliminate(v: &[BigInt], pivot: &[BigInt], alpha: &BigInt, beta: &BigInt) -> Vec<BigInt> {
    let a = alpha.abs();
    let b = if alpha.is_negative() { -beta } else { beta.clone() };
    let mut out: Vec<BigInt> = v
        .iter()
        .zip(pivot)
        .map(|(x, p)| &a * x - &b * p)
        .collect();
    make_primitive(&mut out);
    out
}

pub fn cone_generators(n: usize, ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>]) -> ConeGenerators {
    let total = eqs.len() + ineqs.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    let constraints = eqs
        .iter()
        .map(|e| (e, true))
        .chain(ineqs.iter().map(|a| (a, false)));
    for (k, (row, is_eq)) in constraints.enumerate() {
        debug_assert_eq!(row.len(), n);
        if row.iter().all(Zero::is_zero) {
            for r in rays.iter_mut() {
                r.zero.set(k);
            }
            continue;
        }

        if let Some(p) = lineality.iter().position(|l| !idot(row, l).is_zero()) {
            let pivot = lineality.remove(p);
            let alpha = idot(row, &pivot);
            for l in lineality.iter_mut() {
                let beta = idot(row, l);
                if !beta.is_zero() {
                    *l = eliminate(l, &pivot, &alpha, &beta);
                }
            }
            for r in rays.iter_mut() {
                let beta = idot(row, &r.v);
                if !beta.is_zero() {
                    r.v = eliminate(&r.v, &pivot, &alpha, &beta);
                }
                r.zero.set(k);
            }
            if !is_eq {
                let v: Vec<BigInt> = if alpha.is_positive() {
                    pivot.iter().map(|x| -x).collect()
                } else {
                    pivot
                };
                let mut zero = Bits::new(total);
                zero.fill_below(k);
                rays.push(Ray { v, zero });
            }
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| idot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if pos.is_empty() && (!is_eq || neg.is_empty()) {
            for (i, r) in rays.iter_mut().enumerate() {
                if values[i].is_zero() {
                    r.zero.set(k);
                }
            }
            continue;
        }

        let need = n.saturating_sub(lineality.len()).saturating_sub(2);
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero);
                if common.count() < need {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && common.subset_of(&r.zero));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let mut v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| vp * xq + &vq * xp)
                    .collect();
                make_primitive(&mut v);
                let mut zero = common;
                zero.set(k);
                created.push(Ray { v, zero });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            let val = &values[i];
            if val.is_zero() {
                r.zero.set(k);
                next.push(r);
            } else if val.is_negative() && !is_eq {
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    ConeGenerators {
        lineality: lineality
            .into_iter()
            .map(|mut l| {
                make_primitive(&mut l);
                l
            })
            .collect(),
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn orthant_has_unit_rays() {
        // -x <= 0, -y <= 0
        let g = cone_generators(2, &[iv(&[-1, 0]), iv(&[0, -1])], &[]);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), vec![iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn halfplane_keeps_a_line() {
        let g = cone_generators(2, &[iv(&[0, 1])], &[]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, vec![iv(&[0, -1])]);
    }

    #[test]
    fn square_pyramid_cone() {
        // cone over the square [-1,1]^2 at height z: |x| <= z, |y| <= z
        let rows = [
            iv(&[1, 0, -1]),
            iv(&[-1, 0, -1]),
            iv(&[0, 1, -1]),
            iv(&[0, -1, -1]),
        ];
        let g = cone_generators(3, &rows, &[]);
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            vec![iv(&[-1, -1, 1]), iv(&[-1, 1, 1]), iv(&[1, -1, 1]), iv(&[1, 1, 1])]
        );
    }

    #[test]
    fn equality_cuts_dimension() {
        // x = y, z >= 0 in R^3 (written -z <= 0)
        let g = cone_generators(3, &[iv(&[0, 0, -1])], &[iv(&[1, -1, 0])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, vec![iv(&[0, 0, 1])]);
    }

    #[test]
    fn contradictory_rows_leave_origin() {
        let g = cone_generators(1, &[iv(&[1]), iv(&[-1])], &[]);
        assert!(g.lineality.is_empty());
        assert!(g.rays.is_empty());
    }
}
