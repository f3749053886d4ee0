#![allow(dead_code)]

use lcpbound::Matrix;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random dense matrix with entries uniform in [-3, 3].
pub fn random_matrix(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<f64> = (0..n * n).map(|_| rng.random_range(-3.0..=3.0)).collect();
    Matrix::new(n, data).unwrap()
}

/// Random strictly diagonally dominant Z-matrix with positive diagonal:
/// nonpositive off-diagonal entries and a diagonal exceeding the row's
/// absolute off-diagonal sum by a margin in [0.5, 2].
pub fn random_sdd_z(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.set(i, j, -rng.random_range(0.0..=1.0));
            }
        }
    }
    for i in 0..n {
        let off: f64 = (0..n).filter(|&j| j != i).map(|j| m.get(i, j).abs()).sum();
        let margin: f64 = rng.random_range(0.5..=2.0);
        m.set(i, i, off + margin);
    }
    m
}
