mod common;

use common::{random_nonneg_matrix, random_permutation, rng};
use nniep::constructions::{catalog, families};
use nniep::exact::{int, rat, AnyMatrix, ExactMatrix, Rational};
use nniep::spectra::Spectrum;
use nniep::verification::{
    is_diagonalizable, is_irreducible, jordan_structure, perron_vector, sign_pattern, symmetric_eigen, verify_spectrum,
};
use rand::Rng;

fn samples() -> Vec<(String, ExactMatrix, Spectrum)> {
    let mut out = Vec::new();
    for e in catalog() {
        if let AnyMatrix::Rational(m) = &e.matrix {
            out.push((e.name.to_string(), m.clone(), e.spectrum.clone()));
        }
    }
    for f in families() {
        for t in [rat(1, 2), rat(3, 4), int(1), rat(7, 3)] {
            out.push((format!("{}@{t}", f.name), f.eval(&t), f.target_at(&t)));
        }
    }
    out
}

#[test]
fn jordan_structure_is_consistent() {
    for (name, a, sp) in samples() {
        let n = a.n();
        let mut all_simple = true;
        let mut distinct: Vec<Rational> = sp.values().to_vec();
        distinct.dedup();
        for lam in &distinct {
            let r = jordan_structure(&a, lam).unwrap();
            assert_eq!(r.algebraic_multiplicity, sp.multiplicity(lam), "{name}");
            assert_eq!(r.block_sizes.iter().sum::<usize>(), r.algebraic_multiplicity, "{name}");
            assert_eq!(r.block_sizes.len(), n - a.shift(&-lam.clone()).rank(), "{name}");
            let d: Vec<i64> = r.rank_sequence.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect();
            assert!(d.windows(2).all(|w| w[0] >= w[1]), "{name}: rank drops must not increase");
            all_simple &= r.block_sizes.iter().all(|&b| b == 1);
        }
        assert_eq!(is_diagonalizable(&a), all_simple, "{name}");
    }
}

#[test]
fn verified_pairs_have_matching_power_traces() {
    for (name, a, sp) in samples() {
        assert!(verify_spectrum(&a, &sp).unwrap().charpoly_match, "{name}");
        for k in 1..=5 {
            assert_eq!(a.pow(k).trace(), sp.power_sum(k).unwrap(), "{name} k={k}");
        }
    }
}

#[test]
fn lm_family_has_one_jordan_block_at_minus_two() {
    for t in [rat(1, 2), int(1), int(2)] {
        let a = nniep::constructions::family_lm_sigma_hat().eval(&t);
        let r = jordan_structure(&a, &int(-2)).unwrap();
        assert_eq!(r.block_sizes, vec![3]);
        assert!(!is_diagonalizable(&a));
    }
}

#[test]
fn irreducibility_is_permutation_invariant() {
    let mut r = rng(21);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let a = random_nonneg_matrix(&mut r, n);
        let p = random_permutation(&mut r, n);
        assert_eq!(is_irreducible(&a.permute(&p)).unwrap(), is_irreducible(&a).unwrap());
    }
}

#[test]
fn jacobi_matches_exact_roots_on_symmetric_catalog() {
    for e in catalog().iter().filter(|e| e.claimed.symmetric) {
        let pairs = symmetric_eigen(&e.matrix.to_f64_rows(), 1e-12).unwrap();
        for (p, exact) in pairs.iter().zip(e.spectrum.values()) {
            assert!((p.value - nniep::exact::ratio_to_f64(exact)).abs() < 1e-10, "{}", e.name);
        }
    }
}

#[test]
fn sign_patterns_of_catalog_and_family() {
    let hat = catalog().into_iter().find(|e| e.name == "sym_sigma_hat_t1").unwrap();
    let pairs = symmetric_eigen(&hat.matrix.to_f64_rows(), 1e-12).unwrap();
    let second = &pairs[1];
    assert!((second.value - 2.0).abs() < 1e-10);
    let sp = sign_pattern(&second.vector, 1e-9);
    // the eigenvalue 2 lives on the 2×2 block with vector (1, 1)/√2
    assert_eq!((sp.positives, sp.negatives, sp.zeros), (2, 0, 3));

    let lm = AnyMatrix::Rational(nniep::constructions::family_lm_sigma_hat().eval(&int(1)));
    let (lambda, v) = perron_vector(&lm.to_f64_rows(), 1e-12, 100_000).unwrap();
    assert!((lambda - 4.0).abs() < 1e-8);
    let sp = sign_pattern(&v, 1e-9);
    assert_eq!((sp.positives, sp.negatives, sp.zeros), (5, 0, 0));
}

#[test]
fn schur_identity_on_planted_products() {
    use nniep::verification::schur_rank_identity;
    let mut r = rng(22);
    for _ in 0..100 {
        let n = r.gen_range(2..=6);
        let k = r.gen_range(1..=3.min(n));
        // factors with identity tops keep the leading k×k block invertible
        let factor = |r: &mut rand_chacha::ChaCha8Rng| -> Vec<Vec<i64>> {
            (0..n)
                .map(|i| (0..k).map(|j| if i < k { (i == j) as i64 } else { r.gen_range(-3..=3) }).collect())
                .collect()
        };
        let (u, v) = (factor(&mut r), factor(&mut r));
        let b = ExactMatrix::from_fn(n, |i, j| (0..k).fold(int(0), |acc, c| acc + int(u[i][c] * v[j][c])));
        let out = schur_rank_identity(&b, k).unwrap();
        assert_eq!(out.rank, k);
        assert!(out.identity_holds);
    }
}

#[test]
fn cubic_identity_on_catalog_and_families() {
    use nniep::verification::check_cubic_identity;
    let jordan = nniep::constructions::catalog_entry("jordan_sigma_3_4").unwrap();
    let AnyMatrix::Rational(a) = &jordan.matrix else { panic!("rational entry") };
    assert!(!check_cubic_identity(a, &rat(3, 4)));
    assert!(!check_cubic_identity(&nniep::constructions::family_perturbed().eval(&rat(1, 2)), &rat(1, 2)));
    let hat = nniep::constructions::catalog_entry("sym_sigma_hat_t1").unwrap();
    let AnyMatrix::Rational(a) = &hat.matrix else { panic!("rational entry") };
    assert!(check_cubic_identity(a, &int(1)));
}
