//! Invariants over generated instances, driven by proptest seeds.

use proptest::prelude::*;

use convex_calculus::calculus::{inf_convolution_support, support_intersection_theorem};
use convex_calculus::cone::{cone_sum, cones_equal, normal_cone};
use convex_calculus::extremality::{check_extremal, separate};
use convex_calculus::lp::{solve_lp, verify_certificate, LinearProgram, LpOutcome};
use convex_calculus::oracle::{random_lp, random_pair_with_common_point, random_polytope};
use convex_calculus::polyhedron::{difference_set, minkowski_sum, ConvexSet, HRep, Row};
use convex_calculus::rational::{rat, zeros, Extended, Rational};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() }
}

fn pair(seed: u64, dim: usize) -> (ConvexSet, ConvexSet, Vec<Rational>) {
    random_pair_with_common_point(seed, dim, 3).unwrap()
}

fn scaled(s: &ConvexSet, k: &Rational) -> ConvexSet {
    let h = s.hrep().unwrap();
    let up = |r: &Row| Row::new(r.normal.clone(), &r.rhs * k);
    ConvexSet::from_hrep(HRep::new(s.dim(), h.ineqs.iter().map(up).collect(), h.eqs.iter().map(up).collect()).unwrap())
}

fn kind(o: &LpOutcome) -> u8 {
    match o {
        LpOutcome::Optimal { .. } => 0,
        LpOutcome::Infeasible { .. } => 1,
        LpOutcome::Unbounded { .. } => 2,
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn h_and_v_descriptions_agree(seed in 0u64..10_000, dim in 2usize..=3) {
        let (a, _, _) = pair(seed, dim);
        let back = ConvexSet::from_vrep(a.to_vrep().unwrap());
        let again = ConvexSet::from_hrep(back.to_hrep().unwrap());
        prop_assert!(a.same_set(&again).unwrap());
    }

    #[test]
    fn core_matches_interior_of_difference(seed in 0u64..10_000, dim in 2usize..=3) {
        let (a, b, _) = pair(seed, dim);
        let d = difference_set(&a, &b).unwrap();
        let o = zeros(dim);
        prop_assert_eq!(d.core_contains(&o).unwrap(), d.interior_contains(&o).unwrap());
    }

    #[test]
    fn minkowski_sum_commutes(seed in 0u64..10_000) {
        let (a, b, _) = pair(seed, 2);
        let ab = minkowski_sum(&a, &b).unwrap();
        let ba = minkowski_sum(&b, &a).unwrap();
        prop_assert!(ab.same_set(&ba).unwrap());
    }

    #[test]
    fn extremality_is_invariant_under_scaling(seed in 0u64..10_000, k in 1i64..=5, dim in 2usize..=3) {
        let (a, b, _) = pair(seed, dim);
        let k = rat(k, 2);
        let before = check_extremal(&a, &b, None).unwrap().extremal;
        let after = check_extremal(&scaled(&a, &k), &scaled(&b, &k), None).unwrap().extremal;
        prop_assert_eq!(before, after);
    }

    #[test]
    fn separable_exactly_when_extremal(seed in 0u64..10_000, dim in 2usize..=3) {
        let (a, b, _) = pair(seed, dim);
        let extremal = check_extremal(&a, &b, None).unwrap().extremal;
        let sep = separate(&a, &b).unwrap();
        prop_assert_eq!(sep.is_some(), extremal);
        if let Some(c) = sep {
            prop_assert!(c.verify(&a, &b).unwrap());
        }
    }

    #[test]
    fn cone_sum_is_canonical_and_symmetric(seed in 0u64..10_000, dim in 2usize..=3) {
        let (a, b, p) = pair(seed, dim);
        let (n1, n2) = (normal_cone(&a, &p).unwrap(), normal_cone(&b, &p).unwrap());
        let (s12, s21) = (cone_sum(&n1, &n2).unwrap(), cone_sum(&n2, &n1).unwrap());
        prop_assert_eq!(&s12, &s21);
        prop_assert!(cones_equal(&s12, &s21).unwrap());
    }

    #[test]
    fn support_of_intersection_never_exceeds_convolution(seed in 0u64..10_000, x in -3i64..=3, y in -3i64..=3) {
        let (a, b, _) = pair(seed, 2);
        let xstar = vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())];
        let v = support_intersection_theorem(&a, &b, &xstar).unwrap();
        prop_assert!(v.inequality_holds);
        prop_assert!(v.holds());
    }

    #[test]
    fn convolution_with_a_point_support(seed in 0u64..10_000, x in -3i64..=3, y in -3i64..=3, cx in -4i64..=4, cy in -4i64..=4) {
        // the convolution is σ of P ∩ {c}: linear when c ∈ P, -inf otherwise
        let poly = random_polytope(seed, 2).unwrap();
        let c = vec![rat(cx, 2), rat(cy, 2)];
        let xstar = vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())];
        let conv = inf_convolution_support(&poly, &ConvexSet::point(&c).unwrap(), &xstar).unwrap().value;
        let expected = if poly.contains_point(&c).unwrap() {
            Extended::Finite(&xstar[0] * &c[0] + &xstar[1] * &c[1])
        } else {
            Extended::NegInfinity
        };
        prop_assert_eq!(conv, expected);
    }

    #[test]
    fn lp_is_deterministic_and_row_order_free(seed in 0u64..100_000, rot in 0usize..7) {
        let lp = random_lp(seed);
        let out = solve_lp(&lp).unwrap();
        prop_assert_eq!(&out, &solve_lp(&lp).unwrap());
        prop_assert!(verify_certificate(&lp, &out));

        let mut permuted = LinearProgram::new(lp.objective.clone());
        let m = lp.ineq_lhs.len();
        for i in 0..m {
            let j = (i + rot) % m.max(1);
            permuted.ineq(lp.ineq_lhs[j].clone(), lp.ineq_rhs[j].clone());
        }
        for (row, rhs) in lp.eq_lhs.iter().zip(&lp.eq_rhs) {
            permuted.equal(row.clone(), rhs.clone());
        }
        permuted.var_signs = lp.var_signs.clone();
        let other = solve_lp(&permuted).unwrap();
        prop_assert!(verify_certificate(&permuted, &other));
        prop_assert_eq!(kind(&out), kind(&other));
        if let (LpOutcome::Optimal { value: v1, .. }, LpOutcome::Optimal { value: v2, .. }) = (&out, &other) {
            prop_assert_eq!(v1, v2);
        }
    }
}
