//! LCP(M, q): find `x >= 0` with `Mx + q >= 0` and `x^T (Mx + q) = 0`.
//!
//! Small instances are solved by exhaustive complementary-basis enumeration,
//! an oracle whose correctness is self-evident: for each index subset `alpha`
//! set `x = 0` off `alpha`, solve `M_aa x_a = -q_a`, and accept if the result
//! is feasible. The natural residual `r(x) = min{x, Mx+q}` then drives the
//! end-to-end error-bound check `||x - x*||_inf <= bound * ||r(x)||_inf`.

use crate::consts::{COMPLEMENTARITY_TOL, LCP_DIMENSION_CAP, RESIDUAL_ZERO_TOL};
use crate::error::{Error, Result};
use crate::matcore::{vec_inf_norm, Matrix, Vector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct LcpProblem {
    pub m: Matrix,
    pub q: Vector,
}

impl LcpProblem {
    pub fn new(m: Matrix, q: Vector) -> Result<Self> {
        if q.len() != m.n() {
            return Err(Error::DimensionMismatch {
                expected: m.n(),
                got: q.len(),
            });
        }
        if q.iter().any(|v| !v.is_finite()) {
            return Err(Error::DomainError("q entries must be finite".into()));
        }
        Ok(LcpProblem { m, q })
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }
}

#[derive(Debug, Clone)]
pub struct LcpSolution {
    pub x_star: Vector,
    /// `M x* + q`.
    pub w_star: Vector,
    /// Indices where `x*_i > 0`.
    pub active_set: Vec<usize>,
}

/// Solution plus how many complementary bases the enumeration accepted;
/// exactly one for P-matrix inputs.
#[derive(Debug, Clone)]
pub struct LcpSolveReport {
    pub solution: LcpSolution,
    pub accepted_bases: usize,
}

/// Componentwise `min{x, Mx + q}`; vanishes exactly at the solution.
pub fn residual(p: &LcpProblem, x: &[f64]) -> Vector {
    assert_eq!(x.len(), p.n(), "x length mismatch");
    let w = p.m.mul_vec(x);
    x.iter()
        .zip(w.iter().zip(&p.q))
        .map(|(&xi, (wi, qi))| xi.min(wi + qi))
        .collect()
}

/// Enumerate all 2^n complementary bases in ascending bitmask order and
/// return the first accepted solution. Singular basis systems are skipped,
/// not fatal. Feasibility tolerances are scaled by `1 + ||q||_inf`.
pub fn solve_bruteforce(p: &LcpProblem) -> Result<LcpSolveReport> {
    let n = p.n();
    if n > LCP_DIMENSION_CAP {
        return Err(Error::DimensionCap {
            n,
            cap: LCP_DIMENSION_CAP,
        });
    }
    let tol = COMPLEMENTARITY_TOL * (1.0 + vec_inf_norm(&p.q));

    let mut first: Option<LcpSolution> = None;
    let mut accepted = 0usize;

    for mask in 0u64..1 << n {
        let alpha: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let x = match basis_solve(p, &alpha) {
            Some(x) => x,
            None => continue, // singular basis
        };
        if alpha.iter().any(|&i| x[i] < -tol) {
            continue;
        }
        let w: Vector = p
            .m
            .mul_vec(&x)
            .iter()
            .zip(&p.q)
            .map(|(a, b)| a + b)
            .collect();
        if (0..n).any(|i| !alpha.contains(&i) && w[i] < -tol) {
            continue;
        }
        accepted += 1;
        if first.is_none() {
            let active_set = (0..n).filter(|&i| x[i] > 0.0).collect();
            first = Some(LcpSolution {
                x_star: x,
                w_star: w,
                active_set,
            });
        }
    }

    match first {
        Some(solution) => Ok(LcpSolveReport {
            solution,
            accepted_bases: accepted,
        }),
        None => Err(Error::NoSolution),
    }
}

/// Solve `M_aa x_a = -q_a` and embed into a full vector with zeros off
/// `alpha`. `None` when the basis submatrix is singular.
fn basis_solve(p: &LcpProblem, alpha: &[usize]) -> Option<Vector> {
    let n = p.n();
    let k = alpha.len();
    if k == 0 {
        return Some(vec![0.0; n]);
    }
    let mut sub = Matrix::zeros(k);
    for (r, &i) in alpha.iter().enumerate() {
        for (c, &j) in alpha.iter().enumerate() {
            sub.set(r, c, p.m.get(i, j));
        }
    }
    let rhs: Vector = alpha.iter().map(|&i| -p.q[i]).collect();
    let xa = crate::matcore::lu_solve(&sub, &rhs).ok()?;
    let mut x = vec![0.0; n];
    for (r, &i) in alpha.iter().enumerate() {
        x[i] = xa[r];
    }
    Some(x)
}

/// Outcome of sampling the error bound `||x - x*||_inf <= bound * ||r(x)||_inf`
/// at random points. Trials with `||r(x)||_inf` below the zero threshold are
/// still counted in the pass/fail totals but excluded from the worst ratio.
#[derive(Debug, Clone)]
pub struct ChenXiangReport {
    pub trials: usize,
    pub passes: usize,
    pub failures: usize,
    pub near_zero_residuals: usize,
    pub worst_ratio: Option<f64>,
    pub bound: f64,
    pub seed: u64,
}

/// Draw `trials` points with components uniform in `[0, 2(1 + ||x*||_inf)]`
/// and check the error bound at each. Points are drawn from per-trial
/// substreams of the seed, so results are independent of evaluation order.
pub fn verify_chen_xiang(
    p: &LcpProblem,
    bound: f64,
    trials: usize,
    seed: u64,
) -> Result<ChenXiangReport> {
    if bound < 0.0 {
        return Err(Error::DomainError("bound must be nonnegative".into()));
    }
    let report = solve_bruteforce(p)?;
    let x_star = &report.solution.x_star;
    let hi = 2.0 * (1.0 + vec_inf_norm(x_star));

    let mut passes = 0;
    let mut failures = 0;
    let mut near_zero = 0;
    let mut worst: Option<f64> = None;

    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(1 + trial as u64);
        let x: Vector = (0..p.n()).map(|_| rng.random_range(0.0..=hi)).collect();

        let err = vec_inf_norm(
            &x.iter()
                .zip(x_star)
                .map(|(a, b)| a - b)
                .collect::<Vec<_>>(),
        );
        let res_norm = vec_inf_norm(&residual(p, &x));

        if err <= bound * res_norm + 1e-9 {
            passes += 1;
        } else {
            failures += 1;
        }
        if res_norm < RESIDUAL_ZERO_TOL {
            near_zero += 1;
        } else {
            let ratio = err / res_norm;
            worst = Some(worst.map_or(ratio, |w: f64| w.max(ratio)));
        }
    }

    Ok(ChenXiangReport {
        trials,
        passes,
        failures,
        near_zero_residuals: near_zero,
        worst_ratio: worst,
        bound,
        seed,
    })
}
