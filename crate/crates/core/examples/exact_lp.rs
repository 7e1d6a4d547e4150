//! Exact simplex with self-checking certificates.
//!
//! Solves one optimal, one infeasible and one unbounded program and re-checks
//! every answer from its certificate alone.

use convex_calculus::lp::{solve_lp, verify_certificate, LinearProgram, LpOutcome, VarSign};
use convex_calculus::rational::{fmt_rational, fmt_vector, int, rat, vec_of};

fn show(name: &str, lp: &LinearProgram) {
    let out = solve_lp(lp).expect("well-formed program");
    match &out {
        LpOutcome::Optimal { point, value, dual } => println!(
            "{name}: optimal value {} at {}, multipliers {}",
            fmt_rational(value),
            fmt_vector(point),
            fmt_vector(dual)
        ),
        LpOutcome::Infeasible { farkas } => println!("{name}: infeasible, Farkas multipliers {}", fmt_vector(farkas)),
        LpOutcome::Unbounded { point, ray } => {
            println!("{name}: unbounded from {} along {}", fmt_vector(point), fmt_vector(ray))
        }
    }
    println!("  certificate verifies: {}", verify_certificate(lp, &out));
}

fn main() {
    // minimize -x - y over x + 2y <= 4, 3x + y <= 6, x, y >= 0
    let mut lp = LinearProgram::new(vec_of(&[-1, -1]));
    lp.ineq(vec_of(&[1, 2]), int(4)).ineq(vec_of(&[3, 1]), int(6));
    lp.set_sign(0, VarSign::NonNegative).set_sign(1, VarSign::NonNegative);
    show("optimal", &lp);

    let mut lp = LinearProgram::feasibility(1);
    lp.ineq(vec_of(&[1]), rat(-1, 2)).ineq(vec_of(&[-1]), int(0));
    show("infeasible", &lp);

    let mut lp = LinearProgram::new(vec_of(&[-1, 0]));
    lp.equal(vec_of(&[0, 1]), rat(1, 3));
    show("unbounded", &lp);
}
