use crate::error::{domain, Error, Result};
use crate::exact::{ExactMatrix, Rational};
use crate::spectra::{check_suleimanova, Spectrum};

/// Companion matrix of `x^n + c_{n−1}x^{n−1} + … + c_0`: ones on the
/// superdiagonal and `−c_0, …, −c_{n−1}` along the last row.
pub fn companion(coeffs_low_first: &[Rational]) -> ExactMatrix {
    let n = coeffs_low_first.len();
    ExactMatrix::from_fn(n, |i, j| {
        if i + 1 == n {
            -coeffs_low_first[j].clone()
        } else if j == i + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer(0.into())
        }
    })
}

/// Nonnegative companion realization of a list with a single positive value
/// and nonnegative sum. The result is verified before it is returned.
pub fn suleimanova_companion(sp: &Spectrum) -> Result<ExactMatrix> {
    let report = check_suleimanova(sp);
    if !report.applicable || !report.satisfied {
        return Err(domain(format!("{sp} needs exactly one positive value and a nonnegative sum")));
    }
    let target = sp.target_poly();
    let coeffs = &target.coeffs()[..sp.n()];
    let m = companion(coeffs);
    if !m.is_nonnegative() {
        return Err(Error::Construction(format!("companion of {target} has a negative entry")));
    }
    if m.charpoly() != target {
        return Err(Error::Internal(format!("companion charpoly differs from {target}")));
    }
    Ok(m)
}
