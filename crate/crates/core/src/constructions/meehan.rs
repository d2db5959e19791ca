//! Numeric fit of the structured form
//!
//! ```text
//! [ t 1 0 0 0 ]
//! [ p 0 1 0 0 ]
//! [ 0 q 0 1 0 ]
//! [ 0 0 0 0 1 ]
//! [ 0 0 w h 0 ]
//! ```
//!
//! to the spectrum `(3+t, 3, −2, −2, −2)`.

use crate::error::{domain, Error, Result};
use crate::exact::{int, ExactMatrix, Poly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub t: f64,
    /// `[p, q, w, h]`.
    pub parameters: [f64; 4],
    /// Max coefficient mismatch, recomputed from `parameters`.
    pub residual: f64,
    pub nonnegative: bool,
    /// Index of the seed that produced the solution.
    pub seed: usize,
}

pub const CONVERGED: f64 = 1e-12;
pub const NONNEG_TOL: f64 = 1e-10;
const MAX_ITER: usize = 200;
const SEED_VALUES: [f64; 4] = [0.5, 2.0, 5.0, 10.0];

pub fn structured_matrix(t: &Rational, [p, q, w, h]: &[Rational; 4]) -> ExactMatrix {
    let (o, i) = (int(0), int(1));
    ExactMatrix::from_rows(vec![
        vec![t.clone(), i.clone(), o.clone(), o.clone(), o.clone()],
        vec![p.clone(), o.clone(), i.clone(), o.clone(), o.clone()],
        vec![o.clone(), q.clone(), o.clone(), i.clone(), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), o.clone(), i],
        vec![o.clone(), o.clone(), w.clone(), h.clone(), o],
    ])
    .expect("square")
}

/// `(x − 3 − t)(x − 3)(x + 2)³`.
pub fn target_poly(t: &Rational) -> Poly {
    Poly::from_roots(&[int(3) + t, int(3), int(-2), int(-2), int(-2)])
}

/// Mismatch in the `x³, x², x, 1` coefficients of the charpoly against the
/// target; the `x⁴` coefficient agrees identically.
fn equations(t: f64, [p, q, w, h]: [f64; 4]) -> [f64; 4] {
    [
        -(h + p + q) + 3.0 * t + 15.0,
        h * t + q * t - w - 6.0 * t + 10.0,
        h * p + h * q + t * w - 28.0 * t - 60.0,
        -h * q * t + p * w - 24.0 * t - 72.0,
    ]
}

fn jacobian(t: f64, [p, q, w, h]: [f64; 4]) -> [[f64; 4]; 4] {
    [[-1.0, -1.0, 0.0, -1.0], [0.0, t, -1.0, t], [h, h, t, p + q], [w, -h * t, p, -q * t]]
}

fn max_abs(v: &[f64; 4]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn norm2(v: &[f64; 4]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Gaussian elimination with partial pivoting; `None` when singular.
fn solve4(mut a: [[f64; 4]; 4], mut b: [f64; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let piv = (col..4).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..4 {
            let f = a[row][col] / a[col][col];
            for k in col..4 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 4];
    for i in (0..4).rev() {
        let s: f64 = (i + 1..4).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

/// Damped Newton from one start; returns the final iterate.
fn newton(t: f64, mut x: [f64; 4]) -> [f64; 4] {
    let mut f = equations(t, x);
    for _ in 0..MAX_ITER {
        if max_abs(&f) < CONVERGED {
            break;
        }
        let Some(dx) = solve4(jacobian(t, x), f) else {
            break;
        };
        let mut step = 1.0;
        let current = norm2(&f);
        loop {
            let trial = [x[0] - step * dx[0], x[1] - step * dx[1], x[2] - step * dx[2], x[3] - step * dx[3]];
            let ft = equations(t, trial);
            if norm2(&ft) < current || step < 1e-10 {
                x = trial;
                f = ft;
                break;
            }
            step /= 2.0;
        }
    }
    x
}

/// Seed `k` of the deterministic grid `{0.5, 2, 5, 10}⁴`.
fn seed(k: usize) -> [f64; 4] {
    let g = |i: usize| SEED_VALUES[(k / 4usize.pow(i as u32)) % 4];
    [g(3), g(2), g(1), g(0)]
}

/// Multistart damped Newton over the first `attempts` grid seeds. Among
/// converged solutions a nonnegative one is preferred, then the lowest
/// residual, then the earliest seed.
pub fn meehan_fit(t: f64, attempts: usize) -> Result<FitResult> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("t must be positive, got {t}")));
    }
    if attempts == 0 {
        return Err(domain("at least one attempt is needed"));
    }
    let mut converged: Option<FitResult> = None;
    let mut best: Option<([f64; 4], f64)> = None;
    for k in 0..attempts.min(256) {
        let x = newton(t, seed(k));
        let residual = max_abs(&equations(t, x));
        if !residual.is_finite() {
            continue;
        }
        if best.is_none_or(|(_, r)| residual < r) {
            best = Some((x, residual));
        }
        if residual < CONVERGED {
            let cand =
                FitResult { t, parameters: x, residual, nonnegative: x.iter().all(|v| *v >= -NONNEG_TOL), seed: k };
            let better = match &converged {
                None => true,
                Some(c) => (cand.nonnegative, -cand.residual) > (c.nonnegative, -c.residual),
            };
            if better {
                converged = Some(cand);
            }
        }
    }
    converged.ok_or_else(|| {
        let (x, r) = best.unwrap_or(([f64::NAN; 4], f64::INFINITY));
        Error::Convergence { best_residual: r, best_parameters: x.to_vec() }
    })
}

/// Whether a converged nonnegative fit exists at `t`.
pub fn meehan_feasible(t: f64, attempts: usize) -> bool {
    meehan_fit(t, attempts).is_ok_and(|r| r.nonnegative)
}

/// Bisects the feasibility flag on `[lo, hi]` (infeasible at `lo`, feasible
/// at `hi`) down to width `tol`; returns the final bracket.
pub fn meehan_boundary(lo: f64, hi: f64, tol: f64, attempts: usize) -> Result<(f64, f64)> {
    if meehan_feasible(lo, attempts) || !meehan_feasible(hi, attempts) {
        return Err(domain("bracket must be infeasible at lo and feasible at hi"));
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if meehan_feasible(mid, attempts) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

/// Max coefficient mismatch recomputed exactly after rounding `t` and the
/// parameters to rationals with denominator `10¹²`.
pub fn exact_residual(fit: &FitResult) -> Result<f64> {
    let round = |v: f64| -> Result<Rational> {
        let scaled = (v * 1e12).round();
        if !scaled.is_finite() {
            return Err(domain("non-finite parameter"));
        }
        Ok(Rational::new((scaled as i64).into(), 1_000_000_000_000i64.into()))
    };
    let t = round(fit.t)?;
    let params =
        [round(fit.parameters[0])?, round(fit.parameters[1])?, round(fit.parameters[2])?, round(fit.parameters[3])?];
    let diff = &structured_matrix(&t, &params).charpoly() - &target_poly(&t);
    Ok(diff.coeffs().iter().map(crate::exact::ratio_to_f64).fold(0.0, |m, x| m.max(x.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn equations_match_exact_charpoly() {
        let t = rat(1, 3);
        let params = [rat(7, 2), rat(2, 5), int(11), rat(17, 2)];
        let diff = &structured_matrix(&t, &params).charpoly() - &target_poly(&t);
        let f = equations(1.0 / 3.0, [3.5, 0.4, 11.0, 8.5]);
        // charpoly − target, x³ down to x⁰
        for (k, fk) in [(3, f[0]), (2, f[1]), (1, f[2]), (0, f[3])] {
            assert!((crate::exact::ratio_to_f64(&diff.coeff(k)) - fk).abs() < 1e-9);
        }
        assert_eq!(diff.coeff(4), int(0));
    }

    #[test]
    fn seeds_cover_grid() {
        let all: std::collections::BTreeSet<String> = (0..256).map(|k| format!("{:?}", seed(k))).collect();
        assert_eq!(all.len(), 256);
        assert_eq!(seed(0), [0.5; 4]);
    }

    #[test]
    fn fit_above_boundary() {
        let r = meehan_fit(0.52, 256).unwrap();
        assert!(r.residual < 1e-10);
        assert!(r.nonnegative);
        assert!((exact_residual(&r).unwrap() - r.residual).abs() < 1e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(meehan_fit(-1.0, 256).is_err());
        assert!(meehan_fit(0.5, 0).is_err());
    }
}
