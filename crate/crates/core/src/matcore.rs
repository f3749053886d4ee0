//! Dense square-matrix arithmetic, LU solves, infinity norms, and the
//! matrix-class predicates (Z, SDD, M, P, B) everything else depends on.
//!
//! All predicates use strict comparisons with zero tolerance: the defining
//! inequalities of the SDD and B-matrix classes are strict, and fuzzing them
//! would corrupt the class hierarchy near boundaries. Boundary inputs are
//! simply classified `false`.

use crate::consts::{INVERSE_NONNEG_SLACK, PIVOT_REL_THRESHOLD, P_MINOR_CAP};
use crate::error::{Error, Result};

/// Length-checked at use sites against the paired matrix dimension.
pub type Vector = Vec<f64>;

/// Dense real square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Build from row-major entries. Requires `n >= 1`, `data.len() == n*n`,
    /// and every entry finite.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainError("dimension must be at least 1".into()));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::DomainError("matrix entries must be finite".into()));
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
            });
        }
        Matrix::new(n, rows.concat())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Matrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vector {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Max over rows of the sum of absolute entries.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum())
            .fold(0.0, f64::max)
    }

    /// True when every diagonal entry is strictly positive.
    pub fn has_positive_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) > 0.0)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

pub fn vec_inf_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// Matrix-class membership report. `is_p` is present only when the dimension
/// is at most [`P_MINOR_CAP`]; above the cap it is never guessed.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub is_z: bool,
    pub is_sdd: bool,
    pub is_m: bool,
    pub is_p: Option<bool>,
    pub is_b: bool,
}

// ── LU with partial pivoting ────────────────────────────────────────

/// Packed LU factors of a square matrix, with the pivot threshold taken
/// relative to the input's infinity norm.
struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
}

impl LuFactors {
    fn factor(a: &Matrix) -> Result<Self> {
        let n = a.n;
        let threshold = PIVOT_REL_THRESHOLD * a.inf_norm();
        let mut lu = a.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();

        for col in 0..n {
            let (pivot_row, pivot_abs) = (col..n)
                .map(|r| (r, lu[r * n + col].abs()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pivot_abs <= threshold {
                return Err(Error::SingularMatrix);
            }
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
                perm.swap(col, pivot_row);
            }
            let pivot = lu[col * n + col];
            for r in col + 1..n {
                let factor = lu[r * n + col] / pivot;
                lu[r * n + col] = factor;
                for j in col + 1..n {
                    lu[r * n + j] -= factor * lu[col * n + j];
                }
            }
        }
        Ok(LuFactors { n, lu, perm })
    }

    fn solve(&self, b: &[f64]) -> Vector {
        let n = self.n;
        let mut x: Vector = self.perm.iter().map(|&p| b[p]).collect();
        // forward: L has unit diagonal
        for i in 1..n {
            for j in 0..i {
                x[i] -= self.lu[i * n + j] * x[j];
            }
        }
        // backward
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu[i * n + j] * x[j];
            }
            x[i] /= self.lu[i * n + i];
        }
        x
    }
}

/// Solve `a * x = b` by LU with partial pivoting.
pub fn lu_solve(a: &Matrix, b: &[f64]) -> Result<Vector> {
    if b.len() != a.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            got: b.len(),
        });
    }
    Ok(LuFactors::factor(a)?.solve(b))
}

/// Inverse computed column by column from a single LU factorization.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.n;
    let factors = LuFactors::factor(a)?;
    let mut inv = Matrix::zeros(n);
    let mut e = vec![0.0; n];
    for col in 0..n {
        e[col] = 1.0;
        let x = factors.solve(&e);
        e[col] = 0.0;
        for row in 0..n {
            inv.set(row, col, x[row]);
        }
    }
    Ok(inv)
}

/// Max over rows of the sum of absolute entries.
pub fn inf_norm(a: &Matrix) -> f64 {
    a.inf_norm()
}

/// Determinant of the principal submatrix indexed by `idx`, by Gaussian
/// elimination with partial pivoting. A vanishing pivot yields 0 rather
/// than an error; the P-predicate only needs the sign.
fn principal_minor(a: &Matrix, idx: &[usize]) -> f64 {
    let k = idx.len();
    let mut sub = vec![0.0; k * k];
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            sub[r * k + c] = a.get(i, j);
        }
    }
    let mut det = 1.0;
    for col in 0..k {
        let (pivot_row, pivot_abs) = (col..k)
            .map(|r| (r, sub[r * k + col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_abs == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for j in 0..k {
                sub.swap(col * k + j, pivot_row * k + j);
            }
            det = -det;
        }
        let pivot = sub[col * k + col];
        det *= pivot;
        for r in col + 1..k {
            let factor = sub[r * k + col] / pivot;
            for j in col + 1..k {
                sub[r * k + j] -= factor * sub[col * k + j];
            }
        }
    }
    det
}

/// Row conditions of the B-matrix class: every row sum positive, and the row
/// mean strictly above every off-diagonal entry of that row. For `n = 1` the
/// second condition is vacuous, so membership reduces to `m_11 > 0`.
pub fn is_b_matrix(a: &Matrix) -> bool {
    let n = a.n;
    (0..n).all(|i| {
        let row = a.row(i);
        let sum: f64 = row.iter().sum();
        sum > 0.0
            && row
                .iter()
                .enumerate()
                .all(|(j, &v)| j == i || sum / n as f64 > v)
    })
}

/// Classify against the Z, SDD, M, P, and B classes. Singularity during the
/// M-check yields `is_m = false`, not an error.
pub fn classify(a: &Matrix) -> ClassReport {
    let n = a.n;
    let is_z = (0..n).all(|i| (0..n).all(|j| i == j || a.get(i, j) <= 0.0));
    let is_sdd = (0..n).all(|i| {
        let off: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| a.get(i, j).abs())
            .sum();
        a.get(i, i).abs() > off
    });
    let is_m = is_z
        && match inverse(a) {
            Ok(inv) => inv.entries().iter().all(|&v| v >= -INVERSE_NONNEG_SLACK),
            Err(_) => false,
        };
    let is_p = (n <= P_MINOR_CAP).then(|| {
        (1usize..1 << n).all(|mask| {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            principal_minor(a, &idx) > 0.0
        })
    });
    let is_b = is_b_matrix(a);

    // Z + SDD + positive diagonal is a nonsingular M-matrix.
    debug_assert!(!(is_sdd && is_z && a.has_positive_diagonal()) || is_m);

    ClassReport {
        is_z,
        is_sdd,
        is_m,
        is_p,
        is_b,
    }
}
