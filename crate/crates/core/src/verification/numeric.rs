use crate::error::{domain, Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    /// Unit norm, first nonzero component positive.
    pub vector: Vec<f64>,
}

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// by descending eigenvalue.
pub fn symmetric_eigen(a: &[Vec<f64>], tol: f64) -> Result<Vec<EigenPair>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(domain("matrix is not square"));
    }
    for i in 0..n {
        for j in 0..i {
            if (a[i][j] - a[j][i]).abs() > tol {
                return Err(domain(format!("asymmetric at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    let off = |m: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i][j] * m[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&m) >= tol {
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return Err(Error::Convergence { best_residual: off(&m), best_parameters: Vec::new() });
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut pairs: Vec<EigenPair> = (0..n)
        .map(|j| {
            let mut vector: Vec<f64> = v.iter().map(|row| row[j]).collect();
            let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
            let flip = vector.iter().find(|x| x.abs() > tol).is_some_and(|x| *x < 0.0);
            for x in vector.iter_mut() {
                *x /= if flip { -norm } else { norm };
            }
            EigenPair { value: m[j][j], vector }
        })
        .collect();
    pairs.sort_by(|a, b| b.value.total_cmp(&a.value));
    Ok(pairs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SignPattern {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
    pub tolerance: f64,
}

impl SignPattern {
    pub fn non_positive(&self) -> usize {
        self.negatives + self.zeros
    }
}

pub fn sign_pattern(v: &[f64], tol: f64) -> SignPattern {
    let positives = v.iter().filter(|x| **x > tol).count();
    let negatives = v.iter().filter(|x| **x < -tol).count();
    SignPattern { positives, negatives, zeros: v.len() - positives - negatives, tolerance: tol }
}

/// Dominant eigenvector of a nonnegative matrix by power iteration on
/// `A + cI`, `c = 1 + max diagonal`, started from all ones and normalized
/// to unit length. Returns `(λ, v)`.
pub fn perron_vector(a: &[Vec<f64>], tol: f64, max_iter: usize) -> Result<(f64, Vec<f64>)> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(domain("matrix is not square"));
    }
    if a.iter().flatten().any(|x| *x < 0.0) {
        return Err(domain("matrix has a negative entry"));
    }
    let c = 1.0 + (0..n).map(|i| a[i][i]).fold(f64::MIN, f64::max);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let y: Vec<f64> = (0..n).map(|i| (0..n).map(|j| a[i][j] * x[j]).sum::<f64>() + c * x[i]).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let y: Vec<f64> = y.iter().map(|v| v / norm).collect();
        let diff = y.iter().zip(&x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        x = y;
        lambda = norm - c;
        if diff < tol {
            return Ok((lambda, x));
        }
    }
    Err(Error::Convergence { best_residual: lambda, best_parameters: x })
}
