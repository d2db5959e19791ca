use crate::error::{domain, Result};
use crate::exact::{AnyMatrix, ExactMatrix, Field, Poly, Rational};
use crate::spectra::Spectrum;

/// Outcome of checking one matrix against one claimed spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub charpoly_match: bool,
    pub nonnegative: bool,
    pub irreducible: bool,
    pub symmetric: bool,
    pub diagonalizable: bool,
    /// `None` when a coefficient is irrational.
    pub charpoly: Option<Poly>,
    pub target: Poly,
    pub negative_entries: Vec<(usize, usize)>,
}

impl VerificationReport {
    /// Spectrum matches and every entry is nonnegative.
    pub fn realizes(&self) -> bool {
        self.charpoly_match && self.nonnegative
    }
}

pub fn verify_spectrum<F: Field>(a: &ExactMatrix<F>, sp: &Spectrum) -> Result<VerificationReport> {
    if a.n() != sp.n() {
        return Err(domain(format!("matrix is {0}x{0} but the spectrum has {1} values", a.n(), sp.n())));
    }
    let charpoly = a.charpoly().to_rational().ok();
    let target = sp.target_poly();
    let negative_entries = a.negative_entries();
    let nonnegative = negative_entries.is_empty();
    Ok(VerificationReport {
        charpoly_match: charpoly.as_ref() == Some(&target),
        nonnegative,
        irreducible: nonnegative && strongly_connected(&support(a)),
        symmetric: a.is_symmetric(),
        diagonalizable: is_diagonalizable(a),
        charpoly,
        target,
        negative_entries,
    })
}

/// [`verify_spectrum`] over whichever field the matrix uses.
pub fn verify_any(a: &AnyMatrix, sp: &Spectrum) -> Result<VerificationReport> {
    match a {
        AnyMatrix::Rational(m) => verify_spectrum(m, sp),
        AnyMatrix::Quad { matrix, .. } => verify_spectrum(matrix, sp),
    }
}

fn support<F: Field>(a: &ExactMatrix<F>) -> Vec<Vec<bool>> {
    (0..a.n()).map(|i| (0..a.n()).map(|j| !a.get(i, j).is_zero()).collect()).collect()
}

fn reach(adj: &[Vec<bool>], transpose: bool) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            let edge = if transpose { adj[j][i] } else { adj[i][j] };
            if edge && !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count
}

fn strongly_connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    n <= 1 || (reach(adj, false) == n && reach(adj, true) == n)
}

/// Strong connectivity of the digraph `i → j` when `A[i][j] ≠ 0`.
pub fn is_irreducible<F: Field>(a: &ExactMatrix<F>) -> Result<bool> {
    if let Some((i, j)) = a.negative_entries().first() {
        return Err(domain(format!("entry ({}, {}) is negative", i + 1, j + 1)));
    }
    Ok(strongly_connected(&support(a)))
}

/// Squarefree minimal polynomial.
pub fn is_diagonalizable<F: Field>(a: &ExactMatrix<F>) -> bool {
    a.minpoly().is_squarefree()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanReport {
    pub eigenvalue: Rational,
    pub algebraic_multiplicity: usize,
    /// Descending.
    pub block_sizes: Vec<usize>,
    /// `rank((A − λI)^k)` for `k = 0, 1, …` until it stabilizes.
    pub rank_sequence: Vec<usize>,
}

/// Jordan block sizes at a rational eigenvalue from the rank sequence of
/// powers of `A − λI`.
pub fn jordan_structure<F: Field>(a: &ExactMatrix<F>, lam: &Rational) -> Result<JordanReport> {
    let n = a.n();
    let lam_f = F::from_rational(lam.clone());
    let mut cp = a.charpoly();
    if !cp.eval(&lam_f).is_zero() {
        return Err(domain(format!("{lam} is not an eigenvalue")));
    }
    let linear = Poly::new(vec![-lam_f.clone(), F::one()]);
    let mut multiplicity = 0;
    while cp.eval(&lam_f).is_zero() {
        cp = cp.div_rem(&linear)?.0;
        multiplicity += 1;
    }
    let shifted = a.shift(&-lam_f);
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(n);
    loop {
        power = &power * &shifted;
        let r = power.rank();
        let prev = *ranks.last().expect("nonempty");
        ranks.push(r);
        if r == prev {
            break;
        }
    }
    // b_k = r_{k−1} − r_k blocks have size ≥ k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut block_sizes = Vec::new();
    for k in (1..at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        block_sizes.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(JordanReport {
        eigenvalue: lam.clone(),
        algebraic_multiplicity: multiplicity,
        block_sizes,
        rank_sequence: ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_verifies() {
        let r =
            verify_spectrum(&ExactMatrix::<Rational>::identity(3), &Spectrum::from_ints(&[1, 1, 1]).unwrap()).unwrap();
        assert!(r.charpoly_match && r.nonnegative && r.symmetric && r.diagonalizable);
        assert!(!r.irreducible);
        assert!(verify_spectrum(&ExactMatrix::<Rational>::identity(3), &Spectrum::from_ints(&[1, 2]).unwrap()).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible(&ExactMatrix::<Rational>::identity(2)).unwrap());
        assert!(is_irreducible(&m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])).unwrap());
        assert!(!is_irreducible(&m(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(is_irreducible(&m(&[&[1, -1], &[1, 1]])).is_err());
    }

    #[test]
    fn jordan_blocks() {
        // J_2(−2) ⊕ (−2) ⊕ (5)
        let a = m(&[&[-2, 1, 0, 0], &[0, -2, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, 5]]);
        let r = jordan_structure(&a, &int(-2)).unwrap();
        assert_eq!(r.algebraic_multiplicity, 3);
        assert_eq!(r.block_sizes, vec![2, 1]);
        assert_eq!(r.rank_sequence, vec![4, 2, 1, 1]);
        assert!(!is_diagonalizable(&a));
        assert_eq!(jordan_structure(&a, &int(5)).unwrap().block_sizes, vec![1]);
        assert!(jordan_structure(&a, &rat(1, 2)).is_err());
        let j3 = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(jordan_structure(&j3, &int(0)).unwrap().block_sizes, vec![3]);
    }
}
