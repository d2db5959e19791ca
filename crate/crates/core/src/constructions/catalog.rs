use crate::error::{Error, Result};
use crate::exact::{int, rat, AnyMatrix, ExactMatrix, QuadExt, Rational};
use crate::spectra::Spectrum;
use crate::verification::verify_any;

/// Properties a catalog matrix is claimed to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimedProperties {
    pub symmetric: bool,
    pub irreducible: bool,
    pub diagonalizable: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub matrix: AnyMatrix,
    pub spectrum: Spectrum,
    pub claimed: ClaimedProperties,
}

impl CatalogEntry {
    /// Re-derives every claim exactly.
    pub fn verify_claims(&self) -> Result<()> {
        let r = verify_any(&self.matrix, &self.spectrum)?;
        let checks = [
            ("charpoly", r.charpoly_match, true),
            ("nonnegative", r.nonnegative, true),
            ("symmetric", r.symmetric, self.claimed.symmetric),
            ("irreducible", r.irreducible, self.claimed.irreducible),
            ("diagonalizable", r.diagonalizable, self.claimed.diagonalizable),
        ];
        for (what, got, want) in checks {
            if got != want {
                return Err(Error::Construction(format!(
                    "catalog entry {}: {what} is {got}, claimed {want}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

fn rational_rows(rows: &[&[Rational]]) -> ExactMatrix {
    ExactMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("square")
}

fn sym_sigma_t1() -> CatalogEntry {
    let q = |v: i64| QuadExt::rational(int(v));
    let s6 = QuadExt::sqrt(6).expect("6 is squarefree");
    let rows = vec![
        vec![q(0), q(2), q(2), q(0), q(0)],
        vec![q(2), q(0), q(2), q(0), q(0)],
        vec![q(2), q(2), q(0), q(0), q(0)],
        vec![q(0), q(0), q(0), q(1), s6.clone()],
        vec![q(0), q(0), q(0), s6, q(0)],
    ];
    CatalogEntry {
        name: "sym_sigma_t1",
        matrix: AnyMatrix::Quad { d: 6, matrix: ExactMatrix::from_rows(rows).expect("square") },
        spectrum: Spectrum::from_ints(&[4, 3, -2, -2, -2]).expect("nonempty"),
        claimed: ClaimedProperties { symmetric: true, irreducible: false, diagonalizable: true },
    }
}

fn sym_sigma_hat_t1() -> CatalogEntry {
    let (o, t) = (int(0), int(2));
    let m = rational_rows(&[
        &[o.clone(), t.clone(), o.clone(), o.clone(), o.clone()],
        &[t.clone(), o.clone(), o.clone(), o.clone(), o.clone()],
        &[o.clone(), o.clone(), o.clone(), t.clone(), t.clone()],
        &[o.clone(), o.clone(), t.clone(), o.clone(), t.clone()],
        &[o.clone(), o.clone(), t.clone(), t, o],
    ]);
    CatalogEntry {
        name: "sym_sigma_hat_t1",
        matrix: m.into(),
        spectrum: Spectrum::from_ints(&[4, 2, -2, -2, -2]).expect("nonempty"),
        claimed: ClaimedProperties { symmetric: true, irreducible: false, diagonalizable: true },
    }
}

fn jordan_sigma_3_4() -> CatalogEntry {
    let raw: [[Rational; 5]; 5] = [
        [int(0), int(8), int(1), int(0), int(0)],
        [int(8), int(0), int(1), int(0), int(0)],
        [rat(75, 2), rat(75, 2), int(0), int(1), int(0)],
        [int(0), int(0), int(0), int(0), int(1)],
        [int(829), int(829), int(256), int(110), int(0)],
    ];
    let quarter = rat(1, 4);
    let m = ExactMatrix::from_fn(5, |i, j| &raw[i][j] * &quarter);
    CatalogEntry {
        name: "jordan_sigma_3_4",
        matrix: m.into(),
        spectrum: Spectrum::new(vec![rat(15, 4), rat(9, 4), int(-2), int(-2), int(-2)]).expect("nonempty"),
        claimed: ClaimedProperties { symmetric: false, irreducible: true, diagonalizable: false },
    }
}

/// The three stored realizations, each re-verified before it is returned.
pub fn catalog() -> Vec<CatalogEntry> {
    let entries = vec![sym_sigma_t1(), sym_sigma_hat_t1(), jordan_sigma_3_4()];
    for e in &entries {
        e.verify_claims().expect("catalog entries are verified on load");
    }
    entries
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly;

    #[test]
    fn charpolys() {
        let c = catalog();
        assert_eq!(c.len(), 3);
        let hat = &c[1];
        // (x² − 4)(x³ − 12x − 16)
        let block = &Poly::from_ints(&[-4, 0, 1]) * &Poly::from_ints(&[-16, -12, 0, 1]);
        assert_eq!(hat.matrix.charpoly().unwrap(), block);
        // (x³ − 12x − 16)(x² − x − 6)
        let sym = &Poly::from_ints(&[-16, -12, 0, 1]) * &Poly::from_ints(&[-6, -1, 1]);
        assert_eq!(c[0].matrix.charpoly().unwrap(), sym);
        assert_eq!(c[0].matrix.radicand(), Some(6));
    }

    #[test]
    fn wrong_claim_is_caught() {
        let mut e = jordan_sigma_3_4();
        e.claimed.diagonalizable = true;
        assert!(e.verify_claims().is_err());
        let mut e = sym_sigma_hat_t1();
        e.spectrum = Spectrum::from_ints(&[4, 3, -2, -2, -2]).unwrap();
        assert!(e.verify_claims().is_err());
    }
}
