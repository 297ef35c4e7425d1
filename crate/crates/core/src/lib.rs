//! Quadrature by integrating a C¹ quadratic spline quasi-interpolant.
//!
//! On a partition `a = x_0 < ... < x_n = b` the discrete quasi-interpolant
//! `Qf = Σ μ_i(f) B_i` reproduces quadratics. Integrating it gives a rule on the
//! `n + 2` nodes `a, (x_0+x_1)/2, ..., (x_{n-1}+x_n)/2, b` which, on a uniform
//! grid, reads
//!
//! ```text
//! h [ (f_0 + f_{n+1})/9 + 7(f_1 + f_n)/8 + 73(f_2 + f_{n-1})/72 + f_3 + ... + f_{n-2} ]
//! ```
//!
//! and is exact for cubics. Its error has the opposite sign to composite
//! Simpson's for functions with a single-signed fourth derivative, and the
//! combination `(32 I_Q + 23 I_S) / 55` removes the `h⁴` term of both.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod convergence;
pub mod error;
pub mod funclib;
pub mod partition;
pub mod peano;
pub mod quadrature;
pub mod spline_qi;
pub mod summation;

pub use error::{Error, Result};
pub use funclib::{builtin, oracle_integral, parse_expression, Integrand};
pub use partition::Partition;
pub use peano::PeanoKernel;
pub use quadrature::{
    build_qi_rule, build_qi_rule_with, extrapolated_qs, simpson, weight_bound_report,
    MomentFormula, QuadratureRule, RuleKind,
};
pub use spline_qi::QuasiInterpolant;
