#![allow(dead_code)]

use nniep::exact::{int, rat, ExactMatrix, Poly, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Rational {
    rat(rng.gen_range(lo * den..=hi * den), den)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> ExactMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let d = rng_den(rng);
                    random_rational(rng, lo, hi, d)
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).unwrap()
}

fn rng_den(rng: &mut impl Rng) -> i64 {
    [1, 1, 2, 3][rng.gen_range(0..4)]
}

pub fn random_nonneg_matrix(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(0.3) { int(0) } else { rat(rng.gen_range(0..=20), rng.gen_range(1..=4)) })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).unwrap()
}

/// Reduced row echelon form over ℚ with plain Gauss–Jordan; rank is the
/// number of pivots.
pub fn rref_rank(a: &ExactMatrix) -> usize {
    let mut m = a.rows();
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Sign changes of `p` on the grid `lo, lo+step, …, hi`.
pub fn grid_sign_changes(p: &Poly, lo: f64, hi: f64, step: f64) -> usize {
    let eval = |x: f64| p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + nniep::exact::ratio_to_f64(c));
    let steps = ((hi - lo) / step).round() as usize;
    let mut changes = 0;
    let mut prev = eval(lo).signum();
    for k in 1..=steps {
        let s = eval(lo + k as f64 * step).signum();
        if s != 0.0 && prev != 0.0 && s != prev {
            changes += 1;
        }
        if s != 0.0 {
            prev = s;
        }
    }
    changes
}

pub fn is_nonneg(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Exact planted rank-`k` matrix `Σ u_i v_iᵀ` with small integer factors.
pub fn planted_rank(rng: &mut impl Rng, n: usize, k: usize) -> ExactMatrix {
    let u: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect();
    let v: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect();
    ExactMatrix::from_fn(n, |i, j| (0..k).fold(int(0), |acc, r| acc + int(u[r][i] * v[r][j])))
}
