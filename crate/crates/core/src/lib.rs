//! Upper bounds on `max_{d in [0,1]^n} ||(I - D + DM)^{-1}||_inf` for B-matrices,
//! the quantity that controls error bounds of linear complementarity problems.
//!
//! The crate evaluates four analytic upper bounds of increasing tightness on that
//! maximum, cross-checks them against a sampled empirical lower bound, and runs the
//! resulting error bound `||x - x*||_inf <= bound * ||r(x)||_inf` end to end on
//! small LCP instances solved by exhaustive complementary-basis enumeration.
//!
//! Modules:
//! - [`matcore`]: dense square matrices, LU solves, infinity norms, matrix-class
//!   predicates (Z, SDD, M, P, B).
//! - [`decomp`]: the split `M = B+ + C` with per-row maxima `r_i+`.
//! - [`bounds`]: the four analytic bounds, the SDD M-matrix inverse bound, and the
//!   scalar inequalities behind them.
//! - [`lcp`]: LCP(M, q) representation, natural residual, brute-force solver, and
//!   the end-to-end error-bound check.
//! - [`verify`]: empirical lower-bounding of the max over `d` by box sampling, and
//!   random B-matrix generation for the property suites.
//! - [`cli`]: matrix/vector file formats and the command front end.

pub mod bounds;
pub mod cli;
pub mod consts;
pub mod decomp;
pub mod error;
pub mod lcp;
pub mod matcore;
pub mod verify;

pub use error::{Error, Result};
pub use matcore::{ClassReport, Matrix, Vector};
