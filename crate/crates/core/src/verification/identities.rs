use crate::error::{domain, Error, Result};
use crate::exact::{check_split, int, mat_mul_rows, ExactMatrix, Field, Poly, Rational};

/// Whether `A³ + (18 − 2t²)I = 4A² + (3 + t²)A` holds exactly, i.e. whether
/// `(x − 3 − t)(x − 3 + t)(x + 2)` annihilates `A`.
pub fn check_cubic_identity<F: Field>(a: &ExactMatrix<F>, t: &Rational) -> bool {
    let t2 = t * t;
    let cubic: Poly<F> = Poly::new(vec![
        F::from_rational(int(18) - int(2) * &t2),
        F::from_rational(-(int(3) + &t2)),
        F::from_int(-4),
        F::one(),
    ]);
    a.eval_poly(&cubic).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurOutcome {
    pub rank: usize,
    pub k: usize,
    /// `B₂₂ = B₂₁ B₁₁⁻¹ B₁₂`.
    pub identity_holds: bool,
    /// `rank(B) = k`, in which case the identity is a theorem.
    pub claimed: bool,
}

/// Checks `B₂₂ = B₂₁ B₁₁⁻¹ B₁₂` for the split after the leading `k × k`
/// block. When `rank(B) = k` the identity must hold and a failure is an
/// [`Error::Internal`].
pub fn schur_rank_identity<F: Field>(b: &ExactMatrix<F>, k: usize) -> Result<SchurOutcome> {
    let n = b.n();
    check_split(n, k)?;
    let b11 = b.leading(k);
    let b11_inv = b11.inverse().map_err(|_| domain(format!("leading {k}x{k} block is singular")))?;
    let b12 = b.block(0..k, k..n);
    let b21 = b.block(k..n, 0..k);
    let b22 = b.block(k..n, k..n);
    let identity_holds = k == n || mat_mul_rows(&mat_mul_rows(&b21, &b11_inv.rows())?, &b12)? == b22;
    let rank = b.rank();
    let claimed = rank == k;
    if claimed && !identity_holds {
        return Err(Error::Internal(format!("rank {rank} matrix violates the Schur complement identity")));
    }
    Ok(SchurOutcome { rank, k, identity_holds, claimed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn cubic_on_diagonal() {
        let t = rat(1, 2);
        let d = ExactMatrix::diagonal(&[rat(7, 2), rat(5, 2), int(-2), int(-2), int(-2)]);
        assert!(check_cubic_identity(&d, &t));
        let d = ExactMatrix::diagonal(&[rat(7, 2), rat(5, 2), rat(-19, 10), int(-2), rat(-21, 10)]);
        assert!(!check_cubic_identity(&d, &t));
    }

    #[test]
    fn schur_examples() {
        let ones = ExactMatrix::from_rows(vec![vec![int(1); 2]; 2]).unwrap();
        let r = schur_rank_identity(&ones, 1).unwrap();
        assert!(r.claimed && r.identity_holds);
        let r = schur_rank_identity(&ExactMatrix::<Rational>::identity(3), 1).unwrap();
        assert_eq!(r.rank, 3);
        assert!(!r.claimed && !r.identity_holds);
        let z = ExactMatrix::<Rational>::zeros(3);
        assert!(schur_rank_identity(&z, 1).is_err());
        assert!(schur_rank_identity(&ones, 0).is_err());
        let r = schur_rank_identity(&ExactMatrix::<Rational>::identity(2), 2).unwrap();
        assert!(r.claimed && r.identity_holds);
    }

    fn planted(u: &[Vec<i64>], v: &[Vec<i64>], n: usize) -> ExactMatrix {
        ExactMatrix::from_fn(n, |i, j| u.iter().zip(v).map(|(a, b)| int(a[i] * b[j])).fold(int(0), |acc, x| acc + x))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn planted_low_rank(
            n in 2usize..=6,
            k in 1usize..=3,
            seed in prop::collection::vec(-5i64..=5, 36),
        ) {
            prop_assume!(k < n);
            let u: Vec<Vec<i64>> = (0..k).map(|r| (0..n).map(|i| seed[(r * n + i) % 36]).collect()).collect();
            let v: Vec<Vec<i64>> = (0..k).map(|r| (0..n).map(|i| seed[(r * 7 + i * 5 + 3) % 36]).collect()).collect();
            let b = planted(&u, &v, n);
            prop_assume!(b.leading(k).det() != int(0));
            let r = schur_rank_identity(&b, k).unwrap();
            prop_assert!(r.claimed);
            prop_assert!(r.identity_holds);
        }
    }
}
