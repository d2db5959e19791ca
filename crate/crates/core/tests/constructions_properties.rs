mod common;

use common::rng;
use nniep::constructions::{
    catalog, exact_residual, families, family_nonneg_threshold, meehan_fit, suleimanova_companion,
};
use nniep::exact::{rat, Rational};
use nniep::spectra::Spectrum;
use nniep::verification::{is_diagonalizable, is_irreducible, verify_spectrum};
use rand::Rng;

fn eps() -> Rational {
    rat(1, 1_000_000_000)
}

#[test]
fn above_threshold_is_nonnegative_and_exact() {
    let mut r = rng(41);
    for f in families() {
        let th = family_nonneg_threshold(&f, &eps()).unwrap();
        let hi = th.upper();
        for _ in 0..20 {
            let t = &hi + rat(r.gen_range(0..=2000), 1000);
            let a = f.eval(&t);
            assert!(a.is_nonnegative(), "{} at {t}", f.name);
            assert!(is_irreducible(&a).unwrap(), "{} at {t}", f.name);
            assert_eq!(a.charpoly(), f.target_at(&t).target_poly(), "{} at {t}", f.name);
        }
    }
}

#[test]
fn below_threshold_has_a_negative_entry() {
    let mut r = rng(42);
    for f in families() {
        let lo = family_nonneg_threshold(&f, &eps()).unwrap().lower();
        for _ in 0..5 {
            let t = &lo * rat(r.gen_range(1..1000), 1000);
            assert!(!f.negative_entries_at(&t).is_empty(), "{} at {t}", f.name);
        }
    }
}

#[test]
fn catalog_claims_hold() {
    for e in catalog() {
        let report = nniep::verification::verify_any(&e.matrix, &e.spectrum).unwrap();
        assert!(report.charpoly_match && report.nonnegative, "{}", e.name);
        assert_eq!(report.symmetric, e.claimed.symmetric, "{}", e.name);
        assert_eq!(report.irreducible, e.claimed.irreducible, "{}", e.name);
        assert_eq!(report.diagonalizable, e.claimed.diagonalizable, "{}", e.name);
        if let nniep::exact::AnyMatrix::Rational(m) = &e.matrix {
            assert_eq!(is_diagonalizable(m), m.minpoly().is_squarefree());
        }
    }
}

#[test]
fn companion_output_is_verified() {
    let mut r = rng(43);
    for _ in 0..40 {
        let n = r.gen_range(1..=5);
        let mut v: Vec<Rational> = (1..n).map(|_| rat(-r.gen_range(0..=12), r.gen_range(1..=3))).collect();
        let tail: Rational = v.iter().map(|x| -x.clone()).sum();
        v.push(tail + rat(r.gen_range(0..=6), 2));
        let sp = Spectrum::new(v).unwrap();
        if let Ok(a) = suleimanova_companion(&sp) {
            assert!(a.is_nonnegative());
            assert!(verify_spectrum(&a, &sp).unwrap().charpoly_match);
        }
    }
}

#[test]
fn meehan_residual_is_reproducible() {
    for t in [0.6, 0.75, 1.0, 1.5] {
        let fit = meehan_fit(t, 256).unwrap();
        let exact = exact_residual(&fit).unwrap();
        assert!((exact - fit.residual).abs() < 1e-9, "t={t}");
    }
}
