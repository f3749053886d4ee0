//! Numerical thresholds and caps used across the crate, kept in one place.

/// A pivot whose magnitude is at or below `PIVOT_REL_THRESHOLD * ||A||_inf`
/// is treated as singular during LU elimination.
pub const PIVOT_REL_THRESHOLD: f64 = 1e-13;

/// Slack on the entrywise nonnegativity of a computed inverse when deciding
/// whether a Z-matrix is a nonsingular M-matrix. Absorbs rounding; a true
/// M-matrix inverse is nonnegative exactly.
pub const INVERSE_NONNEG_SLACK: f64 = 1e-10;

/// Largest dimension for which the P-matrix predicate enumerates all 2^n - 1
/// principal minors. Above this cap the predicate is reported absent.
pub const P_MINOR_CAP: usize = 15;

/// Largest dimension accepted by the brute-force LCP solver (2^n bases).
pub const LCP_DIMENSION_CAP: usize = 20;

/// Base complementarity tolerance; scaled by `1 + ||q||_inf` at use sites.
pub const COMPLEMENTARITY_TOL: f64 = 1e-9;

/// Residual norms below this are treated as zero when forming error ratios.
pub const RESIDUAL_ZERO_TOL: f64 = 1e-12;

/// Largest dimension for which the empirical max estimator sweeps all 2^n
/// vertices of the box [0,1]^n.
pub const VERTEX_SWEEP_CAP: usize = 12;
