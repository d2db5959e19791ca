//! Explicit realizing matrices: parametrized families, a verified catalog,
//! companion realizations, threshold isolation and a structured numeric fit.

mod catalog;
mod companion;
mod family;
mod meehan;
mod realize;
mod threshold;

pub use catalog::{catalog, catalog_entry, CatalogEntry, ClaimedProperties};
pub use companion::{companion, suleimanova_companion};
pub use family::{
    families, family_by_name, family_lm_sigma_hat, family_perturbed, AffineValue, MatrixFamily, QuotedThreshold,
};
pub use meehan::{
    exact_residual, meehan_boundary, meehan_feasible, meehan_fit, structured_matrix, target_poly, FitResult, CONVERGED,
    NONNEG_TOL,
};
pub use realize::{guo_deduction, guo_extend, matrix_certificates, Deduction, MatrixCertificate, Source, GUO_RULE};
pub use threshold::{family_nonneg_threshold, ClosedFormCheck, ThresholdResult};
