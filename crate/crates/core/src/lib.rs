//! Exact polyhedral convex calculus over the rationals.
//!
//! The crate decides extremality of pairs of convex polyhedra, produces
//! separating functionals and extremal-principle certificates, checks the
//! normal-cone intersection rule under the bounded extremality condition, and
//! verifies the support-function / infimal-convolution identity for set
//! intersections. Every yes/no answer comes with a witness that can be
//! re-checked with exact arithmetic.
//!
//! Module map:
//!
//! * [`lp`]: certified simplex over [`rational::Rational`].
//! * [`polyhedron`]: H/V representations, double description, Minkowski
//!   algebra, interior/core membership.
//! * [`cone`]: polyhedral cones and normal cones.
//! * [`extremality`]: extremal systems, separation, extremal principle.
//! * [`calculus`]: qualification conditions, intersection rule, support
//!   functions and infimal convolution.
//! * [`oracle`]: brute-force cross-checks and deterministic instance
//!   generators.
//! * [`format`], [`report`], [`svg`], [`suite`], [`cli`]: the instance file
//!   format, reports, figures and the command-line surface.

pub mod calculus;
pub mod cli;
pub mod cone;
pub mod error;
pub mod extremality;
pub mod format;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod polyhedron;
pub mod rational;
pub mod report;
pub mod suite;
pub mod svg;

pub use error::{Error, Result};
pub use rational::{Extended, Functional, Point, Rational, Vector};
