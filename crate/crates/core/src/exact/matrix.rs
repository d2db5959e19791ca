//! Dense square matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::field::Field;
use super::{Poly, Rational};
use crate::error::{domain, Error, Result};

/// Square `n × n` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F = Rational> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![F::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension { expected: n, found: bad.len() });
        }
        Ok(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn diagonal(values: &[F]) -> Self {
        let n = values.len();
        Self::from_fn(n, |i, j| if i == j { values[i].clone() } else { F::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &F> {
        self.data.iter()
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.data.chunks(self.n.max(1)).map(<[F]>::to_vec).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ExactMatrix<G> {
        ExactMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn trace(&self) -> F {
        (0..self.n).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// `self + c·I`
    pub fn shift(&self, c: &F) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i).clone() + c.clone();
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    /// Every entry `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        !self.data.iter().any(F::is_neg)
    }

    /// Row-major positions (0-based) of negative entries.
    pub fn negative_entries(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).filter(|&(i, j)| self.get(i, j).is_neg()).collect()
    }

    /// Rectangular block `rows × cols` as a row list.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<Vec<F>> {
        rows.map(|i| cols.clone().map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// Leading principal `k × k` submatrix.
    pub fn leading(&self, k: usize) -> Self {
        Self::from_rows(self.block(0..k, 0..k)).expect("square block")
    }

    /// Simultaneous row/column permutation `PᵀAP`, where new index `i`
    /// takes old index `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.n, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Exact rank by fraction-free (Bareiss) elimination with full pivot search.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> F {
        let n = self.n;
        if n == 0 {
            return F::one();
        }
        let mut a = self.rows();
        let mut prev = F::one();
        let mut sign_flip = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return F::zero();
            };
            if p != k {
                a.swap(p, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v.div(&prev).expect("Bareiss divisor is a previous nonzero pivot");
                }
                a[i][k] = F::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
                return Err(Error::Singular { rank: self.rank(), n });
            };
            a.swap(p, col);
            inv.swap(p, col);
            let pivot_inv = a[col][col].inv().expect("nonzero pivot");
            for j in 0..n {
                a[col][j] = a[col][j].clone() * pivot_inv.clone();
                inv[col][j] = inv[col][j].clone() * pivot_inv.clone();
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    a[i][j] = a[i][j].clone() - f.clone() * a[col][j].clone();
                    inv[i][j] = inv[i][j].clone() - f.clone() * inv[col][j].clone();
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Monic `det(xI − A)` by the Faddeev–LeVerrier recursion
    /// `M_k = A·M_{k−1} + c_{n−k+1} I`, `c_{n−k} = −tr(A·M_k)/k`.
    pub fn charpoly(&self) -> Poly<F> {
        let n = self.n;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            m = (self * &m).shift(&coeffs[n - k + 1]);
            let am = self * &m;
            let c = -am.trace().div(&F::from_int(k as i64)).expect("k > 0");
            coeffs[n - k] = c;
        }
        Poly::new(coeffs)
    }

    /// Least-degree monic annihilating polynomial, found as the first power
    /// `A^k` linearly dependent on `I, A, …, A^{k−1}` (vectorized).
    pub fn minpoly(&self) -> Poly<F> {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        // Incremental echelon basis of vec(A^j): each row stored with the
        // combination of powers that produced it.
        let mut basis: Vec<(Vec<F>, Vec<F>, usize)> = Vec::new();
        let mut power = Self::identity(n);
        for k in 0..=n {
            let mut v = power.data.clone();
            let mut combo = vec![F::zero(); n + 1];
            combo[k] = F::one();
            for (row, row_combo, pivot) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.clone() - f.clone() * r.clone();
                }
                for (c, rc) in combo.iter_mut().zip(row_combo) {
                    *c = c.clone() - f.clone() * rc.clone();
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    // combo · (I, A, …, A^k) = 0 with combo[k] = 1
                    combo.truncate(k + 1);
                    return Poly::new(combo);
                }
                Some(pivot) => {
                    let inv = v[pivot].inv().expect("nonzero pivot");
                    let v: Vec<F> = v.into_iter().map(|x| x * inv.clone()).collect();
                    let combo: Vec<F> = combo.into_iter().map(|x| x * inv.clone()).collect();
                    basis.push((v, combo, pivot));
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley–Hamilton bounds the minimal polynomial degree by n")
    }

    /// `p(A)` by Horner's scheme.
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in p.coeffs().iter().rev() {
            acc = (&acc * self).shift(c);
        }
        acc
    }
}

/// Rank of a rectangular row list by fraction-free elimination with full
/// pivot search.
pub fn rank_of_rows<F: Field>(mut a: Vec<Vec<F>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = F::one();
    let mut col_order: Vec<usize> = (0..cols).collect();
    while rank < rows && rank < cols {
        let pivot =
            (rank..rows).flat_map(|i| (rank..cols).map(move |j| (i, j))).find(|&(i, j)| !a[i][col_order[j]].is_zero());
        let Some((pi, pj)) = pivot else { break };
        a.swap(rank, pi);
        col_order.swap(rank, pj);
        let pc = col_order[rank];
        for i in rank + 1..rows {
            for jj in rank + 1..cols {
                let j = col_order[jj];
                let v = a[rank][pc].clone() * a[i][j].clone() - a[i][pc].clone() * a[rank][j].clone();
                a[i][j] = v.div(&prev).expect("Bareiss divisor is a previous nonzero pivot");
            }
            a[i][pc] = F::zero();
        }
        prev = a[rank][pc].clone();
        rank += 1;
    }
    rank
}

/// Product of rectangular row lists.
pub fn mat_mul_rows<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let inner = a.first().map_or(0, Vec::len);
    if b.len() != inner {
        return Err(Error::Dimension { expected: inner, found: b.len() });
    }
    let cols = b.first().map_or(0, Vec::len);
    Ok(a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(F::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone()))
                .collect()
        })
        .collect())
}

pub fn same_dimension<F: Field>(a: &ExactMatrix<F>, n: usize) -> Result<()> {
    if a.n() == n {
        Ok(())
    } else {
        Err(Error::Dimension { expected: a.n(), found: n })
    }
}

impl<F: Field> Mul for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn mul(self, rhs: Self) -> ExactMatrix<F> {
        assert_eq!(self.n, rhs.n, "matrix product dimension mismatch");
        let n = self.n;
        ExactMatrix::from_fn(n, |i, j| {
            (0..n).fold(F::zero(), |acc, k| acc + self.get(i, k).clone() * rhs.get(k, j).clone())
        })
    }
}

impl<F: Field> Add for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn add(self, rhs: Self) -> ExactMatrix<F> {
        assert_eq!(self.n, rhs.n, "matrix sum dimension mismatch");
        ExactMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

impl<F: Field> Sub for &ExactMatrix<F> {
    type Output = ExactMatrix<F>;
    fn sub(self, rhs: Self) -> ExactMatrix<F> {
        assert_eq!(self.n, rhs.n, "matrix difference dimension mismatch");
        ExactMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }
}

impl<F: Field + fmt::Display> fmt::Display for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.n.max(1)) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// `p(A)`.
pub fn matrix_poly_eval<F: Field>(p: &Poly<F>, a: &ExactMatrix<F>) -> ExactMatrix<F> {
    a.eval_poly(p)
}

/// Leading `k × k` block must be a proper block of an `n × n` matrix.
pub(crate) fn check_split(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(domain(format!("block split {k} invalid for dimension {n}")));
    }
    Ok(())
}
