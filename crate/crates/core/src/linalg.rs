//! Small dense symmetric linear algebra: just enough for the
//! Rayleigh-Ritz pencils this crate assembles (dimension ≤ a few
//! hundred). Cyclic Jacobi is used for the symmetric eigenproblem; it
//! is slow in O-notation but fully accurate and dependency-free.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
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
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] += v;
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    /// Frobenius norm of the antisymmetric part `(A - Aᵀ)/1`.
    pub fn asymmetry_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let d = self.get(i, j) - self.get(j, i);
                s += 2.0 * d * d;
            }
        }
        math::sqrt(s)
    }

    /// Replace the matrix by its symmetric part `(A + Aᵀ)/2`.
    pub fn symmetrize(&mut self) {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let v = 0.5 * (self.get(i, j) + self.get(j, i));
                self.set(i, j, v);
                self.set(j, i, v);
            }
        }
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    /// Scale row i and column j patterns: `A <- D A D` with `D = diag(s)`.
    pub fn scale_symmetric(&mut self, s: &[f64]) {
        for i in 0..self.n {
            for j in 0..self.n {
                self.data[i * self.n + j] *= s[i] * s[j];
            }
        }
    }
}

/// Lower-triangular Cholesky factor `L` with `A = L Lᵀ`.
pub struct Cholesky {
    n: usize,
    l: Vec<f64>,
}

/// Factor a symmetric positive definite matrix. Returns `None` when a
/// pivot is not strictly positive (matrix not SPD at working precision).
pub fn cholesky(a: &Matrix) -> Option<Cholesky> {
    let n = a.dim();
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i * n + i] = math::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Some(Cholesky { n, l })
}

impl Cholesky {
    /// Solve `L y = b`.
    pub fn forward_solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut s = b[i];
            for k in 0..i {
                s -= self.l[i * n + k] * y[k];
            }
            y[i] = s / self.l[i * n + i];
        }
        y
    }

    /// Solve `Lᵀ x = b`.
    pub fn back_solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for k in (i + 1)..n {
                s -= self.l[k * n + i] * x[k];
            }
            x[i] = s / self.l[i * n + i];
        }
        x
    }

    /// `L⁻¹ A L⁻ᵀ` for symmetric `A`: the congruence that reduces the
    /// generalized pencil `(A, B)` to a standard symmetric problem.
    pub fn reduce(&self, a: &Matrix) -> Matrix {
        let n = self.n;
        // W = L^{-1} A  (forward solve on each column of A)
        let mut w = Matrix::zeros(n);
        for j in 0..n {
            let col: Vec<f64> = (0..n).map(|i| a.get(i, j)).collect();
            let y = self.forward_solve(&col);
            for i in 0..n {
                w.set(i, j, y[i]);
            }
        }
        // C = W L^{-T}: solve L c_iᵀ = w_iᵀ row-wise
        let mut c = Matrix::zeros(n);
        for i in 0..n {
            let row: Vec<f64> = (0..n).map(|j| w.get(i, j)).collect();
            let y = self.forward_solve(&row);
            for j in 0..n {
                c.set(i, j, y[j]);
            }
        }
        c.symmetrize();
        c
    }
}

/// Eigendecomposition of a symmetric matrix: `values` ascending,
/// `vectors[k]` the orthonormal eigenvector for `values[k]`.
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi with threshold deflation. Converges quadratically;
/// 30 sweeps is far beyond what dimension ≤ 200 ever needs.
pub fn symmetric_eigen(m: &Matrix) -> SymmetricEigen {
    let n = m.dim();
    let mut a = m.clone();
    a.symmetrize();
    // accumulated rotations, rows = eigenvectors
    let mut v = Matrix::zeros(n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let norm = a.norm().max(f64::MIN_POSITIVE);
    let tol = 1e-15 * norm;
    for _sweep in 0..30 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a.get(p, q) * a.get(p, q);
            }
        }
        if math::sqrt(2.0 * off) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if math::abs(apq) <= 1e-300 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                // stable tangent of the rotation angle
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let vpk = v.get(p, k);
                    let vqk = v.get(q, k);
                    v.set(p, k, c * vpk - s * vqk);
                    v.set(q, k, s * vpk + c * vqk);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|k| v.get(i, k)).collect())
        .collect();
    SymmetricEigen { values, vectors }
}
