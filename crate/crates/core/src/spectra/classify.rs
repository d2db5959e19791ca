use std::fmt;

use super::conditions::{
    check_diagonalizable_pattern, check_extreme, check_jll, check_lm_trace_zero, check_mn_symmetric, check_perron,
    check_power_sums, check_suleimanova, ConditionReport,
};
use super::partition::{scan, Bipartition};
use super::Spectrum;
use crate::constructions::{guo_deduction, matrix_certificates, Deduction, MatrixCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// Any nonnegative realization.
    Niep,
    /// A diagonalizable nonnegative realization.
    DRniep,
    /// A symmetric nonnegative realization.
    Sniep,
}

impl Problem {
    pub const ALL: [Problem; 3] = [Problem::Niep, Problem::DRniep, Problem::Sniep];

    pub fn name(self) -> &'static str {
        match self {
            Self::Niep => "NIEP",
            Self::DRniep => "D-RNIEP",
            Self::Sniep => "SNIEP",
        }
    }

    fn accepts(self, cert: &MatrixCertificate) -> bool {
        match self {
            Self::Niep => true,
            Self::DRniep => cert.report.diagonalizable,
            Self::Sniep => cert.report.symmetric,
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Realizable,
    NotRealizable,
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Self::Realizable => "REALIZABLE",
            Self::NotRealizable => "NOT_REALIZABLE",
            Self::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Matrix(Box<MatrixCertificate>),
    Deduction(Box<Deduction>),
    Violated(ConditionReport),
    /// The Perron value is repeated, so any realization is reducible, yet no
    /// split of the list passes the necessary conditions.
    EmptyPartitionScan {
        perron_multiplicity: usize,
        splits_examined: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub problem: Problem,
    pub status: Status,
    /// Primary evidence first; empty only for `Unknown`.
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub k_max: u32,
    pub m_max: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { k_max: 10, m_max: 10 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub spectrum: Spectrum,
    pub options: ClassifyOptions,
    /// Every checker, applicable or not, in a fixed order.
    pub conditions: Vec<ConditionReport>,
    /// `None` for a single value.
    pub partition_scan: Option<Vec<Bipartition>>,
    pub verdicts: Vec<Verdict>,
}

impl Classification {
    pub fn verdict(&self, problem: Problem) -> &Verdict {
        self.verdicts.iter().find(|v| v.problem == problem).expect("one verdict per problem")
    }

    pub fn any_violation(&self) -> bool {
        self.conditions.iter().any(ConditionReport::violated)
    }
}

pub fn all_conditions(sp: &Spectrum, opts: ClassifyOptions) -> Vec<ConditionReport> {
    vec![
        check_perron(sp),
        check_power_sums(sp, opts.k_max),
        check_jll(sp, opts.k_max, opts.m_max),
        check_lm_trace_zero(sp),
        check_extreme(sp),
        check_mn_symmetric(sp),
        check_suleimanova(sp),
        check_diagonalizable_pattern(sp),
    ]
}

/// Three verdicts from necessary conditions, the partition argument,
/// explicit certificates and the shift deduction, in that order.
pub fn classify(sp: &Spectrum, opts: ClassifyOptions) -> Classification {
    let conditions = all_conditions(sp, opts);
    let scanned = (sp.n() >= 2).then(|| scan(sp).ok()).flatten();
    let multiplicity = sp.multiplicity(sp.largest());
    let partition_cert = match &scanned {
        Some((found, splits)) if multiplicity >= 2 && found.is_empty() => {
            Some(Certificate::EmptyPartitionScan { perron_multiplicity: multiplicity, splits_examined: *splits })
        }
        _ => None,
    };
    let matrices = matrix_certificates(sp);
    let mut guo: Option<Option<Deduction>> = None;

    let verdicts = Problem::ALL
        .iter()
        .map(|&problem| {
            let mut negative: Vec<Certificate> = conditions
                .iter()
                .filter(|r| r.violated() && r.condition.necessary_for().contains(&problem))
                .cloned()
                .map(Certificate::Violated)
                .collect();
            negative.extend(partition_cert.clone());
            if !negative.is_empty() {
                return Verdict { problem, status: Status::NotRealizable, certificates: negative };
            }
            let positive: Vec<Certificate> = matrices
                .iter()
                .filter(|c| problem.accepts(c))
                .map(|c| Certificate::Matrix(Box::new(c.clone())))
                .collect();
            if !positive.is_empty() {
                return Verdict { problem, status: Status::Realizable, certificates: positive };
            }
            if problem == Problem::Niep {
                if let Some(d) = guo.get_or_insert_with(|| guo_deduction(sp)) {
                    return Verdict {
                        problem,
                        status: Status::Realizable,
                        certificates: vec![Certificate::Deduction(Box::new(d.clone()))],
                    };
                }
            }
            Verdict { problem, status: Status::Unknown, certificates: Vec::new() }
        })
        .collect();

    Classification {
        spectrum: sp.clone(),
        options: opts,
        conditions,
        partition_scan: scanned.map(|(found, _)| found),
        verdicts,
    }
}
