//! Empirical lower bounds on `max_{d in [0,1]^n} ||(I-D+DM)^{-1}||_inf` by
//! sampling the box, plus random B-matrix generation for the property suites.
//!
//! The estimator never claims to find the true maximum; it is used one-sidedly
//! as a falsifier for the analytic upper bounds. Every evaluated sample is a
//! certified lower bound on the maximum, so a sampled value above any analytic
//! bound disproves that bound.

use crate::consts::VERTEX_SWEEP_CAP;
use crate::error::Result;
use crate::matcore::{inverse, Matrix, Vector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Where a sample point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Vertex,
    Grid,
    Random,
}

impl std::fmt::Display for SampleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SampleKind::Vertex => "vertex",
            SampleKind::Grid => "grid",
            SampleKind::Random => "random",
        })
    }
}

/// One evaluated point `d` of the box with its norm value.
#[derive(Debug, Clone)]
pub struct DSample {
    pub d: Vector,
    pub norm_value: f64,
    pub kind: SampleKind,
}

/// Best sample found. `best.norm_value` dominates every evaluated sample;
/// ties keep the earliest sample.
#[derive(Debug, Clone)]
pub struct MaxEstimate {
    pub best: DSample,
    pub samples_evaluated: usize,
    pub singular_encounters: usize,
    pub seed: u64,
}

/// `||(I - D + D M)^{-1}||_inf` at one `d`: row i of `M_D` is row i of `M`
/// scaled by `d_i`, plus `1 - d_i` on the diagonal.
pub fn norm_at(m: &Matrix, d: &[f64]) -> Result<f64> {
    let n = m.n();
    assert_eq!(d.len(), n, "d length mismatch");
    debug_assert!(d.iter().all(|&v| (0.0..=1.0).contains(&v)));
    let mut md = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = d[i] * m.get(i, j) + if i == j { 1.0 - d[i] } else { 0.0 };
            md.set(i, j, v);
        }
    }
    Ok(inverse(&md)?.inf_norm())
}

/// Evaluate the norm over (a) all `2^n` vertices of the box when
/// `n <= VERTEX_SWEEP_CAP`, (b) the zero point, the all-half point, and the
/// all-half point with each single axis pushed to 0 or 1, and (c)
/// `random_samples` uniform draws. Random draw `i` comes from substream `i`
/// of the seed, so a longer run extends a shorter one and the record value
/// never decreases with more samples. Singular points are counted and
/// skipped; the zero point is always nonsingular, so a best sample always
/// exists.
pub fn estimate_max(m: &Matrix, random_samples: usize, seed: u64) -> MaxEstimate {
    let n = m.n();
    let mut best: Option<DSample> = None;
    let mut evaluated = 0usize;
    let mut singular = 0usize;

    let mut consider = |d: Vector, kind: SampleKind| match norm_at(m, &d) {
        Ok(norm_value) => {
            evaluated += 1;
            let better = best.as_ref().map_or(true, |b| norm_value > b.norm_value);
            if better {
                best = Some(DSample {
                    d,
                    norm_value,
                    kind,
                });
            }
        }
        Err(_) => singular += 1,
    };

    if n <= VERTEX_SWEEP_CAP {
        for mask in 0u64..1 << n {
            let d: Vector = (0..n)
                .map(|i| if mask >> i & 1 == 1 { 1.0 } else { 0.0 })
                .collect();
            consider(d, SampleKind::Vertex);
        }
    } else {
        consider(vec![0.0; n], SampleKind::Grid);
    }

    consider(vec![0.5; n], SampleKind::Grid);
    for axis in 0..n {
        for v in [0.0, 1.0] {
            let mut d = vec![0.5; n];
            d[axis] = v;
            consider(d, SampleKind::Grid);
        }
    }

    for i in 0..random_samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(1 + i as u64);
        let d: Vector = (0..n).map(|_| rng.random_range(0.0..=1.0)).collect();
        consider(d, SampleKind::Random);
    }

    MaxEstimate {
        best: best.expect("zero point always evaluates"),
        samples_evaluated: evaluated,
        singular_encounters: singular,
        seed,
    }
}

/// Random B-matrix, deterministic in `(n, seed)`: off-diagonal entries
/// uniform in [-1, 1], then the diagonal is set to
/// `n * max{0, max_offdiag_i} - sum_offdiag_i + delta_i` with `delta_i`
/// uniform in [0.1, 1]. The margin keeps every instance strictly inside the
/// B-matrix cone so classification is never borderline.
pub fn gen_b_matrix(n: usize, seed: u64) -> Matrix {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.set(i, j, rng.random_range(-1.0..=1.0));
            }
        }
    }
    for i in 0..n {
        let delta: f64 = rng.random_range(0.1..=1.0);
        let off: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| m.get(i, j)).collect();
        let max_off = off.iter().copied().fold(0.0, f64::max);
        let sum_off: f64 = off.iter().sum();
        m.set(i, i, n as f64 * max_off - sum_off + delta);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bound_new, example1_matrix};
    use crate::matcore::{classify, is_b_matrix};

    #[test]
    fn norm_at_zero_is_one_exactly() {
        let m = example1_matrix(1);
        assert_eq!(norm_at(&m, &[0.0; 4]).unwrap(), 1.0);
        let g = gen_b_matrix(7, 3);
        assert_eq!(norm_at(&g, &[0.0; 7]).unwrap(), 1.0);
    }

    #[test]
    fn norm_at_ones_is_inverse_norm() {
        let m = example1_matrix(1);
        let direct = inverse(&m).unwrap().inf_norm();
        let via = norm_at(&m, &[1.0; 4]).unwrap();
        assert!((direct - via).abs() <= 1e-12);
    }

    #[test]
    fn identity_estimates_to_one() {
        let est = estimate_max(&Matrix::identity(4), 1000, 9);
        assert_eq!(est.best.norm_value, 1.0);
        assert_eq!(est.singular_encounters, 0);
        assert_eq!(est.best.kind, SampleKind::Vertex);
    }

    #[test]
    fn vertex_sweep_runs_without_random_samples() {
        let est = estimate_max(&example1_matrix(1), 0, 42);
        // 2^4 vertices + 1 center + 8 axis pushes
        assert_eq!(est.samples_evaluated, 16 + 9);
    }

    #[test]
    fn family_estimate_below_new_bound() {
        let m = example1_matrix(1);
        let est = estimate_max(&m, 4096, 42);
        let bound = bound_new(&m).unwrap();
        assert!(
            est.best.norm_value <= bound + 1e-9,
            "sampled {} vs bound {}",
            est.best.norm_value,
            bound
        );
        assert_eq!(est.singular_encounters, 0);
    }

    #[test]
    fn record_is_monotone_in_sample_count() {
        let m = gen_b_matrix(5, 17);
        let short = estimate_max(&m, 64, 5);
        let long = estimate_max(&m, 512, 5);
        assert!(long.best.norm_value >= short.best.norm_value);
    }

    #[test]
    fn generator_is_deterministic_and_in_class() {
        for n in 2..=10 {
            for seed in 1..=20 {
                let a = gen_b_matrix(n, seed);
                assert!(is_b_matrix(&a), "n={n} seed={seed}");
                assert_eq!(a, gen_b_matrix(n, seed));
            }
        }
        let one = gen_b_matrix(1, 3);
        assert!(one.get(0, 0) > 0.0);
    }

    #[test]
    fn generated_instances_are_p_matrices() {
        for seed in 1..=5 {
            let a = gen_b_matrix(6, seed);
            assert_eq!(classify(&a).is_p, Some(true));
        }
    }
}
