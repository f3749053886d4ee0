//! The split `M = B+ + C`: row i of `C` is the constant `r_i+ = max{0,
//! off-diagonal entries of row i}`, which makes `B+` a Z-matrix off the
//! diagonal. Every bound in [`crate::bounds`] consumes this decomposition.

use crate::matcore::{Matrix, Vector};

#[derive(Debug, Clone)]
pub struct BPlusDecomposition {
    pub b_plus: Matrix,
    /// Constant-row remainder; stored densely for clarity at desk scale.
    pub c: Matrix,
    pub r_plus: Vector,
}

/// Defined for any real matrix; downstream bounds reject non-B inputs.
/// For `n = 1` the off-diagonal max is empty, so `r_plus = (0)` and
/// `B+ = M`.
pub fn bplus_decompose(m: &Matrix) -> BPlusDecomposition {
    let n = m.n();
    let r_plus: Vector = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .fold(0.0, f64::max)
        })
        .collect();
    let mut b_plus = Matrix::zeros(n);
    let mut c = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            b_plus.set(i, j, m.get(i, j) - r_plus[i]);
            c.set(i, j, r_plus[i]);
        }
    }
    BPlusDecomposition { b_plus, c, r_plus }
}
