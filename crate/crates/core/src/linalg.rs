//! Dense vector helpers and a cyclic Jacobi eigensolver for real symmetric
//! matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Convergence: off-diagonal Frobenius mass below this fraction of `‖A‖_F`.
pub const JACOBI_RELATIVE_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// `y += alpha * x`
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale(alpha: f64, x: &mut [f64]) {
    for xi in x {
        *xi *= alpha;
    }
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| libm::fabs(x - y))
        .fold(0.0, f64::max)
}

/// Orthonormalizes `vectors` in place with two passes of modified
/// Gram-Schmidt, first against `against` (assumed orthonormal) and then among
/// themselves. Vectors whose remaining norm falls below `drop_below` are
/// discarded. Returns the surviving vectors in their original order.
pub fn orthonormalize(
    vectors: Vec<Vec<f64>>,
    against: &[Vec<f64>],
    drop_below: f64,
) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for mut v in vectors {
        let original = norm(&v);
        for _ in 0..2 {
            for q in against.iter().chain(out.iter()) {
                let c = dot(q, &v);
                axpy(-c, q, &mut v);
            }
        }
        let r = norm(&v);
        if r > drop_below * original.max(1.0) {
            scale(1.0 / r, &mut v);
            out.push(v);
        }
    }
    out
}

/// Eigenpairs of a symmetric matrix, unsorted: `values[j]` belongs to
/// `vectors[j]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi rotations on a dense symmetric `n x n` row-major matrix.
///
/// Rotations run in fixed row-by-row order so results are reproducible bit
/// for bit.
pub fn symmetric_eigen(matrix: &[f64], n: usize) -> Result<SymmetricEigen> {
    if matrix.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            found: matrix.len(),
        });
    }
    let mut a = matrix.to_vec();
    // Eigenvectors accumulate as rows of `v` (row j = eigenvector j), which
    // keeps the rotation updates contiguous.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frobenius = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>());
    let threshold = JACOBI_RELATIVE_TOLERANCE * frobenius;

    let off_diagonal = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        libm::sqrt(s)
    };

    let mut sweeps = 0;
    loop {
        if off_diagonal(&a) <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;

                // A <- A J (columns p, q)
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // A <- J^T A (rows p, q)
                let (row_p, row_q) = split_rows(&mut a, n, p, q);
                for k in 0..n {
                    let apk = row_p[k];
                    let aqk = row_q[k];
                    row_p[k] = c * apk - s * aqk;
                    row_q[k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                let (vp, vq) = split_rows(&mut v, n, p, q);
                for k in 0..n {
                    let x = vp[k];
                    let y = vq[k];
                    vp[k] = c * x - s * y;
                    vq[k] = s * x + c * y;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    let vectors = v.chunks(n.max(1)).take(n).map(<[f64]>::to_vec).collect();
    Ok(SymmetricEigen {
        values,
        vectors,
        sweeps,
    })
}

fn split_rows(m: &mut [f64], n: usize, p: usize, q: usize) -> (&mut [f64], &mut [f64]) {
    debug_assert!(p < q);
    let (head, tail) = m.split_at_mut(q * n);
    (&mut head[p * n..p * n + n], &mut tail[..n])
}
