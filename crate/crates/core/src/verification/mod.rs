//! Certificate checks on candidate realizing matrices.

mod identities;
mod numeric;
mod report;

pub use identities::{check_cubic_identity, schur_rank_identity, SchurOutcome};
pub use numeric::{perron_vector, sign_pattern, symmetric_eigen, EigenPair, SignPattern};
pub use report::{
    is_diagonalizable, is_irreducible, jordan_structure, verify_any, verify_spectrum, JordanReport, VerificationReport,
};
