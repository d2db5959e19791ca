//! Exact tools for deciding, certifying and bounding whether a list of real
//! numbers is the spectrum of an entrywise nonnegative matrix.
//!
//! Modules, bottom-up:
//!
//! * [`exact`]: rationals, `a + b√d` scalars, polynomials with Sturm root
//!   isolation, dense matrix kernels.
//! * [`spectra`]: power sums, necessary conditions, the reducibility scan
//!   and the classifier.
//! * [`constructions`]: realizing families, the catalog, companion
//!   matrices, thresholds and the structured fit.
//! * [`verification`]: certificate checks and numeric eigen-analysis.
//! * [`json`]: the shared JSON formats.

pub mod constructions;
pub mod error;
pub mod exact;
pub mod json;
pub mod spectra;
pub mod verification;

pub use error::{Error, Result};
