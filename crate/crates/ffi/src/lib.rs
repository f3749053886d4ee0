//! C ABI over the lcpbound core: opaque matrix handles, status codes, and
//! plain-old-data result structs so other languages can bind the bounds,
//! the classifier, the sampler, and the LCP machinery.
//!
//! Conventions: every function that can fail returns [`LcpbStatus`] and
//! writes results through out-pointers; handles are created by
//! `lcpb_matrix_new`/`lcpb_matrix_generate_b` and released by
//! `lcpb_matrix_free`; no function takes ownership of its arguments unless
//! documented. The generated header lives at `include/lcpbound.h`.

use std::os::raw::c_char;

use lcpbound::bounds::{bound_report, wang_inverse_bound};
use lcpbound::lcp::{solve_bruteforce, verify_chen_xiang, LcpProblem};
use lcpbound::matcore::classify;
use lcpbound::verify::{estimate_max, gen_b_matrix};
use lcpbound::{Error, Matrix};

/// Status of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcpbStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Dimensions, finiteness, or scalar preconditions violated.
    InvalidArgument = 2,
    /// A matrix was singular where an inverse was required.
    Singular = 3,
    /// The matrix does not satisfy the B-matrix row conditions.
    NotBMatrix = 4,
    /// Not an SDD M-matrix with positive diagonal.
    NotSddM = 5,
    /// Degenerate dominance factor (rounding guard).
    Degenerate = 6,
    /// The LCP enumeration accepted no complementary basis.
    NoSolution = 7,
    /// Problem dimension exceeds the brute-force cap.
    DimensionCap = 8,
}

fn status_of(e: &Error) -> LcpbStatus {
    match e {
        Error::SingularMatrix => LcpbStatus::Singular,
        Error::NotBMatrix => LcpbStatus::NotBMatrix,
        Error::NotSddM | Error::NotApplicable => LcpbStatus::NotSddM,
        Error::Degenerate => LcpbStatus::Degenerate,
        Error::NoSolution => LcpbStatus::NoSolution,
        Error::DimensionCap { .. } => LcpbStatus::DimensionCap,
        _ => LcpbStatus::InvalidArgument,
    }
}

/// Opaque dense square matrix handle.
pub struct LcpbMatrix {
    inner: Matrix,
}

/// Matrix-class membership. `is_p` is meaningful only when `p_computed` is
/// true (the principal-minor check is capped at dimension 15).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LcpbClassReport {
    pub is_z: bool,
    pub is_sdd: bool,
    pub is_m: bool,
    pub is_b: bool,
    pub p_computed: bool,
    pub is_p: bool,
}

/// The four analytic upper bounds, tightest last.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LcpbBounds {
    pub gp: f64,
    pub li2016: f64,
    pub wcdd: f64,
    pub new_bound: f64,
}

/// Result of the empirical max estimator.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LcpbMaxEstimate {
    /// Largest `||(I-D+DM)^{-1}||_inf` found; a lower bound on the true max.
    pub norm_value: f64,
    pub samples_evaluated: usize,
    pub singular_encounters: usize,
}

/// Result of sampling the LCP error bound at random points.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LcpbChenXiangReport {
    pub trials: usize,
    pub passes: usize,
    pub failures: usize,
    pub near_zero_residuals: usize,
    /// Worst `||x - x*|| / ||r(x)||` observed; NaN when every trial had a
    /// near-zero residual.
    pub worst_ratio: f64,
}

unsafe fn matrix_ref<'a>(m: *const LcpbMatrix) -> Option<&'a Matrix> {
    unsafe { m.as_ref().map(|h| &h.inner) }
}

/// Create a matrix handle from `n * n` row-major entries.
///
/// # Safety
/// `entries` must point to `n * n` readable doubles; `out` must be a valid
/// pointer to a handle slot. On success `*out` owns the new handle and must
/// be released with [`lcpb_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn lcpb_matrix_new(
    n: usize,
    entries: *const f64,
    out: *mut *mut LcpbMatrix,
) -> LcpbStatus {
    if entries.is_null() || out.is_null() {
        return LcpbStatus::NullArgument;
    }
    let Some(len) = n.checked_mul(n) else {
        return LcpbStatus::InvalidArgument;
    };
    let data = unsafe { std::slice::from_raw_parts(entries, len) }.to_vec();
    match Matrix::new(n, data) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(LcpbMatrix { inner })) };
            LcpbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Create a random B-matrix handle, deterministic in `(n, seed)`.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot; the result must be
/// released with [`lcpb_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn lcpb_matrix_generate_b(
    n: usize,
    seed: u64,
    out: *mut *mut LcpbMatrix,
) -> LcpbStatus {
    if out.is_null() {
        return LcpbStatus::NullArgument;
    }
    if n == 0 || n.checked_mul(n).is_none() {
        return LcpbStatus::InvalidArgument;
    }
    let inner = gen_b_matrix(n, seed);
    unsafe { *out = Box::into_raw(Box::new(LcpbMatrix { inner })) };
    LcpbStatus::Ok
}

/// Release a handle created by this library. Null is a no-op.
///
/// # Safety
/// `m` must be null or a handle previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcpb_matrix_free(m: *mut LcpbMatrix) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Dimension of the matrix behind a handle; 0 for null.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcpb_matrix_dim(m: *const LcpbMatrix) -> usize {
    unsafe { matrix_ref(m) }.map_or(0, Matrix::n)
}

/// Read entry `(i, j)`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid double slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_matrix_entry(
    m: *const LcpbMatrix,
    i: usize,
    j: usize,
    out: *mut f64,
) -> LcpbStatus {
    let (Some(mat), false) = (unsafe { matrix_ref(m) }, out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    if i >= mat.n() || j >= mat.n() {
        return LcpbStatus::InvalidArgument;
    }
    unsafe { *out = mat.get(i, j) };
    LcpbStatus::Ok
}

/// Classify against the Z, SDD, M, P, B classes.
///
/// # Safety
/// `m` must be a live handle and `out` a valid report slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_classify(
    m: *const LcpbMatrix,
    out: *mut LcpbClassReport,
) -> LcpbStatus {
    let (Some(mat), false) = (unsafe { matrix_ref(m) }, out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    let rep = classify(mat);
    unsafe {
        *out = LcpbClassReport {
            is_z: rep.is_z,
            is_sdd: rep.is_sdd,
            is_m: rep.is_m,
            is_b: rep.is_b,
            p_computed: rep.is_p.is_some(),
            is_p: rep.is_p.unwrap_or(false),
        };
    }
    LcpbStatus::Ok
}

/// Evaluate all four analytic bounds; fails with `NOT_B_MATRIX` otherwise.
///
/// # Safety
/// `m` must be a live handle and `out` a valid bounds slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_bounds(m: *const LcpbMatrix, out: *mut LcpbBounds) -> LcpbStatus {
    let (Some(mat), false) = (unsafe { matrix_ref(m) }, out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    match bound_report(mat) {
        Ok(r) => {
            unsafe {
                *out = LcpbBounds {
                    gp: r.gp,
                    li2016: r.li2016,
                    wcdd: r.wcdd,
                    new_bound: r.new_bound,
                };
            }
            LcpbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Upper bound on `||A^{-1}||_inf` for an SDD M-matrix with positive diagonal.
///
/// # Safety
/// `m` must be a live handle and `out` a valid double slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_wang_inverse_bound(
    m: *const LcpbMatrix,
    out: *mut f64,
) -> LcpbStatus {
    let (Some(mat), false) = (unsafe { matrix_ref(m) }, out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    match wang_inverse_bound(mat) {
        Ok(v) => {
            unsafe { *out = v };
            LcpbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Sampled lower bound on `max_{d in [0,1]^n} ||(I-D+DM)^{-1}||_inf`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid estimate slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_estimate_max(
    m: *const LcpbMatrix,
    random_samples: usize,
    seed: u64,
    out: *mut LcpbMaxEstimate,
) -> LcpbStatus {
    let (Some(mat), false) = (unsafe { matrix_ref(m) }, out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    let est = estimate_max(mat, random_samples, seed);
    unsafe {
        *out = LcpbMaxEstimate {
            norm_value: est.best.norm_value,
            samples_evaluated: est.samples_evaluated,
            singular_encounters: est.singular_encounters,
        };
    }
    LcpbStatus::Ok
}

/// Solve LCP(M, q) by complementary-basis enumeration. Writes the solution
/// into `x_out` (length `n`) and, when non-null, the accepted-basis count
/// into `accepted_bases`.
///
/// # Safety
/// `m` must be a live handle; `q` and `x_out` must point to `n` readable /
/// writable doubles respectively.
#[no_mangle]
pub unsafe extern "C" fn lcpb_lcp_solve(
    m: *const LcpbMatrix,
    q: *const f64,
    x_out: *mut f64,
    accepted_bases: *mut usize,
) -> LcpbStatus {
    let (Some(mat), false, false) = (unsafe { matrix_ref(m) }, q.is_null(), x_out.is_null())
    else {
        return LcpbStatus::NullArgument;
    };
    let n = mat.n();
    let qv = unsafe { std::slice::from_raw_parts(q, n) }.to_vec();
    let problem = match LcpProblem::new(mat.clone(), qv) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match solve_bruteforce(&problem) {
        Ok(r) => {
            unsafe {
                std::ptr::copy_nonoverlapping(r.solution.x_star.as_ptr(), x_out, n);
                if !accepted_bases.is_null() {
                    *accepted_bases = r.accepted_bases;
                }
            }
            LcpbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Check the error bound `||x - x*|| <= bound * ||r(x)||` at `trials` random
/// points.
///
/// # Safety
/// `m` must be a live handle; `q` must point to `n` readable doubles; `out`
/// must be a valid report slot.
#[no_mangle]
pub unsafe extern "C" fn lcpb_verify_chen_xiang(
    m: *const LcpbMatrix,
    q: *const f64,
    bound: f64,
    trials: usize,
    seed: u64,
    out: *mut LcpbChenXiangReport,
) -> LcpbStatus {
    let (Some(mat), false, false) = (unsafe { matrix_ref(m) }, q.is_null(), out.is_null()) else {
        return LcpbStatus::NullArgument;
    };
    let n = mat.n();
    let qv = unsafe { std::slice::from_raw_parts(q, n) }.to_vec();
    let problem = match LcpProblem::new(mat.clone(), qv) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    match verify_chen_xiang(&problem, bound, trials, seed) {
        Ok(r) => {
            unsafe {
                *out = LcpbChenXiangReport {
                    trials: r.trials,
                    passes: r.passes,
                    failures: r.failures,
                    near_zero_residuals: r.near_zero_residuals,
                    worst_ratio: r.worst_ratio.unwrap_or(f64::NAN),
                };
            }
            LcpbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lcpb_status_message(status: LcpbStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        LcpbStatus::Ok => b"ok\0",
        LcpbStatus::NullArgument => b"null pointer argument\0",
        LcpbStatus::InvalidArgument => b"invalid argument\0",
        LcpbStatus::Singular => b"singular matrix\0",
        LcpbStatus::NotBMatrix => b"not a B-matrix\0",
        LcpbStatus::NotSddM => b"not an SDD M-matrix with positive diagonal\0",
        LcpbStatus::Degenerate => b"degenerate dominance factor\0",
        LcpbStatus::NoSolution => b"no complementary basis accepted\0",
        LcpbStatus::DimensionCap => b"dimension exceeds enumeration cap\0",
    };
    msg.as_ptr() as *const c_char
}
