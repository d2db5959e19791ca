//! Candidate spectra, the necessary-condition checkers, the reducibility
//! partition scan and the three-problem classifier.

mod classify;
mod conditions;
mod partition;
mod spectrum;

pub use classify::{all_conditions, classify, Certificate, Classification, ClassifyOptions, Problem, Status, Verdict};
pub use conditions::{
    check_diagonalizable_pattern, check_extreme, check_jll, check_lm_trace_zero, check_mn_symmetric, check_perron,
    check_power_sums, check_suleimanova, extreme_lhs, extreme_polynomial_sigma_t, extreme_threshold_audit,
    sigma_hat_parameter, Condition, ConditionReport, ExtremeAudit, EXTREME_REFERENCE,
};
pub use partition::{part_viable, reducible_partition_scan, Bipartition, SCAN_DEPTH};
pub use spectrum::{PowerSums, Spectrum};
