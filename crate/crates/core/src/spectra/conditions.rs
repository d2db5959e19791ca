//! Necessary (and one sufficient) conditions on candidate spectra.

use num_traits::{Signed, Zero};

use super::{Problem, Spectrum};
use crate::error::Result;
use crate::exact::{int, isolate_smallest_nonneg_root, rat, Poly, Rational};

/// Which inequality a [`ConditionReport`] is about, with its depth
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Perron,
    PowerSums {
        k_max: u32,
    },
    Jll {
        k_max: u32,
        m_max: u32,
    },
    /// Five values with zero sum: `4 s_4 ≥ s_2²`.
    LmTraceZero,
    /// Printed extreme-matrix inequality for five values; informational.
    Extreme,
    /// Symmetric five-value bound `λ₂ + λ₅ ≤ s_1`.
    McDonaldNeumann,
    /// One positive value: realizable iff the sum is nonnegative.
    Suleimanova,
    /// `(3+t, 3−t, −2, −2, −2)` admits a diagonalizable realization only
    /// for `t ≥ 1`.
    DiagonalizablePattern,
}

impl Condition {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Perron => "perron",
            Self::PowerSums { .. } => "power_sums",
            Self::Jll { .. } => "jll",
            Self::LmTraceZero => "lm_trace_zero",
            Self::Extreme => "extreme",
            Self::McDonaldNeumann => "mn_symmetric",
            Self::Suleimanova => "suleimanova",
            Self::DiagonalizablePattern => "diagonalizable_pattern",
        }
    }

    /// One-line statement of the inequality, for `--explain` output.
    pub fn rationale(&self) -> &'static str {
        match self {
            Self::Perron => "the spectral radius max|λ| must itself be a member of the list",
            Self::PowerSums { .. } => "s_k = Σ λ^k equals trace(A^k) of a nonnegative A, so s_k ≥ 0",
            Self::Jll { .. } => "n^(m−1) · s_(km) ≥ (s_k)^m for all k, m ≥ 1",
            Self::LmTraceZero => "five values summing to zero need 4·s_4 ≥ s_2²",
            Self::Extreme => "5×5 extreme realizations satisfy 4·s_4 − s_2² + s_1²·s_2 − s_1⁴/2 ≥ 0 (reported only)",
            Self::McDonaldNeumann => "a symmetric 5×5 realization has λ₂ + λ₅ ≤ trace",
            Self::Suleimanova => "with a single positive value the list is realizable iff its sum is ≥ 0",
            Self::DiagonalizablePattern => {
                "(3+t, 3−t, −2, −2, −2) with t > 0 has a diagonalizable realization only if t ≥ 1"
            }
        }
    }

    /// Problems for which a violation rules realizability out.
    pub fn necessary_for(&self) -> &'static [Problem] {
        match self {
            Self::Perron | Self::PowerSums { .. } | Self::Jll { .. } | Self::LmTraceZero => {
                &[Problem::Niep, Problem::DRniep, Problem::Sniep]
            }
            Self::McDonaldNeumann => &[Problem::Sniep],
            Self::DiagonalizablePattern => &[Problem::DRniep],
            Self::Extreme | Self::Suleimanova => &[],
        }
    }

    /// Re-runs the checker this condition names.
    pub fn check(&self, sp: &Spectrum) -> ConditionReport {
        match *self {
            Self::Perron => check_perron(sp),
            Self::PowerSums { k_max } => check_power_sums(sp, k_max),
            Self::Jll { k_max, m_max } => check_jll(sp, k_max, m_max),
            Self::LmTraceZero => check_lm_trace_zero(sp),
            Self::Extreme => check_extreme(sp),
            Self::McDonaldNeumann => check_mn_symmetric(sp),
            Self::Suleimanova => check_suleimanova(sp),
            Self::DiagonalizablePattern => check_diagonalizable_pattern(sp),
        }
    }
}

/// Outcome of one condition on one spectrum, with exact witnesses.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub condition: Condition,
    pub applicable: bool,
    /// Meaningful only when `applicable`.
    pub satisfied: bool,
    pub witness: Vec<(String, Rational)>,
}

impl ConditionReport {
    fn new(condition: Condition, applicable: bool, satisfied: bool, witness: Vec<(&str, Rational)>) -> Self {
        Self {
            condition,
            applicable,
            satisfied: applicable && satisfied,
            witness: witness.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn not_applicable(condition: Condition) -> Self {
        Self::new(condition, false, false, Vec::new())
    }

    pub fn violated(&self) -> bool {
        self.applicable && !self.satisfied
    }

    pub fn witness_value(&self, key: &str) -> Option<&Rational> {
        self.witness.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

pub fn check_perron(sp: &Spectrum) -> ConditionReport {
    let rho = sp.max_modulus();
    let ok = sp.largest() == &rho;
    ConditionReport::new(Condition::Perron, true, ok, vec![("max_modulus", rho), ("largest", sp.largest().clone())])
}

/// `s_k ≥ 0` for `1 ≤ k ≤ k_max`; witness is the first negative `s_k`, or
/// the smallest one when all are nonnegative.
pub fn check_power_sums(sp: &Spectrum, k_max: u32) -> ConditionReport {
    let cond = Condition::PowerSums { k_max };
    let ps = sp.power_sums(k_max.max(1));
    if let Some((i, s)) = ps.as_slice().iter().enumerate().find(|(_, s)| s.is_negative()) {
        return ConditionReport::new(cond, true, false, vec![("k", int(i as i64 + 1)), ("s_k", s.clone())]);
    }
    let (i, s) = ps.as_slice().iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).expect("k_max >= 1");
    ConditionReport::new(cond, true, true, vec![("k", int(i as i64 + 1)), ("s_k", s.clone())])
}

/// `n^{m−1} s_{km} ≥ s_k^m` for all `k ≤ k_max`, `m ≤ m_max`.
pub fn check_jll(sp: &Spectrum, k_max: u32, m_max: u32) -> ConditionReport {
    let cond = Condition::Jll { k_max, m_max };
    let ps = sp.power_sums(k_max.max(1) * m_max.max(1));
    let n = int(sp.n() as i64);
    for k in 1..=k_max {
        for m in 1..=m_max {
            let lhs = num_traits::pow(n.clone(), (m - 1) as usize) * ps.get(k * m);
            let rhs = num_traits::pow(ps.get(k).clone(), m as usize);
            if lhs < rhs {
                return ConditionReport::new(
                    cond,
                    true,
                    false,
                    vec![("k", int(k.into())), ("m", int(m.into())), ("lhs", lhs), ("rhs", rhs)],
                );
            }
        }
    }
    ConditionReport::new(cond, true, true, vec![("k_max", int(k_max.into())), ("m_max", int(m_max.into()))])
}

/// Five values summing to zero: `4 s_4 ≥ s_2²`.
pub fn check_lm_trace_zero(sp: &Spectrum) -> ConditionReport {
    if sp.n() != 5 || !sp.sum().is_zero() {
        return ConditionReport::not_applicable(Condition::LmTraceZero);
    }
    let ps = sp.power_sums(4);
    let lhs = int(4) * ps.get(4);
    let rhs = ps.get(2) * ps.get(2);
    let ok = lhs >= rhs;
    ConditionReport::new(Condition::LmTraceZero, true, ok, vec![("4s4", lhs), ("s2^2", rhs)])
}

/// Exact left-hand side `4s_4 − s_2² + s_1² s_2 − s_1⁴/2`.
pub fn extreme_lhs(ps: &[Rational; 4]) -> Rational {
    let [s1, s2, _, s4] = ps;
    int(4) * s4 - s2 * s2 + s1 * s1 * s2 - num_traits::pow(s1.clone(), 4) / int(2)
}

pub fn check_extreme(sp: &Spectrum) -> ConditionReport {
    if sp.n() != 5 {
        return ConditionReport::not_applicable(Condition::Extreme);
    }
    let ps = sp.power_sums(4);
    let lhs = extreme_lhs(&[ps.get(1).clone(), ps.get(2).clone(), ps.get(3).clone(), ps.get(4).clone()]);
    let ok = !lhs.is_negative();
    ConditionReport::new(Condition::Extreme, true, ok, vec![("lhs", lhs)])
}

/// Symmetric realizations of five values need `λ₂ + λ₅ ≤ s_1`.
pub fn check_mn_symmetric(sp: &Spectrum) -> ConditionReport {
    if sp.n() != 5 {
        return ConditionReport::not_applicable(Condition::McDonaldNeumann);
    }
    let v = sp.values();
    let lhs = &v[1] + &v[4];
    let trace = sp.sum();
    let ok = lhs <= trace;
    ConditionReport::new(Condition::McDonaldNeumann, true, ok, vec![("lambda2+lambda5", lhs), ("trace", trace)])
}

/// Applicable when exactly the largest value is positive; satisfied (and
/// then sufficient for realizability) when the sum is nonnegative.
pub fn check_suleimanova(sp: &Spectrum) -> ConditionReport {
    let v = sp.values();
    let applicable = v[0].is_positive() && v.get(1).is_none_or(|x| !x.is_positive());
    if !applicable {
        return ConditionReport::not_applicable(Condition::Suleimanova);
    }
    let s1 = sp.sum();
    let ok = !s1.is_negative();
    ConditionReport::new(Condition::Suleimanova, true, ok, vec![("sum", s1)])
}

/// `t` when `sp` is exactly `(3+t, 3−t, −2, −2, −2)` with `t ≥ 0`.
pub fn sigma_hat_parameter(sp: &Spectrum) -> Option<Rational> {
    let v = sp.values();
    if v.len() != 5 || v[2..].iter().any(|x| x != &int(-2)) || &v[0] + &v[1] != int(6) {
        return None;
    }
    Some((&v[0] - &v[1]) / int(2))
}

/// Applicable to `(3+t, 3−t, −2, −2, −2)` with `t > 0`; satisfied iff `t ≥ 1`.
pub fn check_diagonalizable_pattern(sp: &Spectrum) -> ConditionReport {
    match sigma_hat_parameter(sp) {
        Some(t) if t.is_positive() => {
            let ok = t >= int(1);
            ConditionReport::new(Condition::DiagonalizablePattern, true, ok, vec![("t", t)])
        }
        _ => ConditionReport::not_applicable(Condition::DiagonalizablePattern),
    }
}

/// Polynomial in `t` equal to the extreme-condition left-hand side on
/// `(3+t, 3, −2, −2, −2)`.
pub fn extreme_polynomial_sigma_t() -> Poly {
    let values = [
        Poly::new(vec![int(3), int(1)]),
        Poly::constant(int(3)),
        Poly::constant(int(-2)),
        Poly::constant(int(-2)),
        Poly::constant(int(-2)),
    ];
    let power_sum = |k: u32| {
        values.iter().fold(Poly::zero(), |acc, v| {
            let mut p = Poly::one();
            for _ in 0..k {
                p = &p * v;
            }
            &acc + &p
        })
    };
    let (s1, s2, s4) = (power_sum(1), power_sum(2), power_sum(4));
    let s1sq = &s1 * &s1;
    let four_s4 = s4.scale(&int(4));
    let s2sq = &s2 * &s2;
    let mixed = &s1sq * &s2;
    let quartic = (&s1sq * &s1sq).scale(&rat(1, 2));
    &(&(&four_s4 - &s2sq) + &mixed) - &quartic
}

/// Comparison of the root of the printed extreme inequality on
/// `(3+t, 3, −2, −2, −2)` with a reference decimal.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremeAudit {
    pub polynomial: Poly,
    pub root_lo: Rational,
    pub root_hi: Rational,
    pub root_estimate: f64,
    pub reference: Rational,
    pub difference: f64,
    pub tolerance: f64,
    /// `|root − reference| > tolerance`.
    pub discrepancy: bool,
}

/// Reference value quoted for the extreme inequality bound.
pub const EXTREME_REFERENCE: &str = "0.39671";

pub fn extreme_threshold_audit(eps: &Rational) -> Result<ExtremeAudit> {
    let polynomial = extreme_polynomial_sigma_t();
    let iv = isolate_smallest_nonneg_root(&polynomial, eps)?
        .ok_or_else(|| crate::Error::Domain("extreme polynomial has no nonnegative root".into()))?;
    let reference = crate::exact::parse_rational(EXTREME_REFERENCE)?;
    let estimate = iv.midpoint_f64();
    let difference = estimate - crate::exact::ratio_to_f64(&reference);
    let tolerance = 1e-3;
    Ok(ExtremeAudit {
        polynomial,
        root_lo: iv.lo,
        root_hi: iv.hi,
        root_estimate: estimate,
        reference,
        difference,
        tolerance,
        discrepancy: difference.abs() > tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i64]) -> Spectrum {
        Spectrum::from_ints(v).unwrap()
    }

    #[test]
    fn perron_examples() {
        assert!(check_perron(&sp(&[3, 3, -2, -2, -2])).satisfied);
        assert!(check_perron(&sp(&[2, -3])).violated());
        assert!(check_perron(&sp(&[5, 5, -5])).satisfied);
    }

    #[test]
    fn power_sum_examples() {
        // s_k = 2·3^k + 3·(−2)^k ≥ 0 for every k ≥ 1
        let classic = sp(&[3, 3, -2, -2, -2]);
        for k in 1..=10 {
            let direct = 2 * 3i64.pow(k) + 3 * (-2i64).pow(k);
            assert!(direct >= 0);
            assert_eq!(classic.power_sum(k).unwrap(), int(direct));
        }
        assert!(check_power_sums(&classic, 10).satisfied);
        let r = check_power_sums(&sp(&[1, -2]), 1);
        assert!(r.violated());
        assert_eq!(r.witness_value("k"), Some(&int(1)));
        assert_eq!(r.witness_value("s_k"), Some(&int(-1)));
        let r = check_power_sums(&sp(&[3, -1, -1, -1]), 6);
        assert!(r.satisfied);
        assert_eq!(r.witness_value("s_k"), Some(&int(0)));
    }

    #[test]
    fn jll_examples() {
        let tau = Spectrum::new(vec![int(1), int(1), rat(-2, 3), rat(-2, 3), rat(-2, 3)]).unwrap();
        assert!(check_jll(&tau, 10, 10).satisfied);
        // (1,−1,−1): s_odd = −1, s_even = 3; k=1, m=2 gives 9 ≥ 1, but
        // k=1, m=3 gives 9·(−1) < (−1)³
        let r = check_jll(&sp(&[1, -1, -1]), 6, 6);
        assert!(r.violated());
        assert_eq!(r.witness_value("k"), Some(&int(1)));
        assert_eq!(r.witness_value("m"), Some(&int(3)));
        assert_eq!(r.witness_value("lhs"), Some(&int(-9)));
        assert_eq!(r.witness_value("rhs"), Some(&int(-1)));
        assert!(check_jll(&sp(&[1, -1, -1]), 6, 2).satisfied);
        assert!(check_jll(&sp(&[2, -1, -1, -1]), 1, 1).satisfied);
    }

    #[test]
    fn trace_zero_examples() {
        let r = check_lm_trace_zero(&sp(&[3, 3, -2, -2, -2]));
        assert!(r.violated());
        assert_eq!(r.witness_value("4s4"), Some(&int(840)));
        assert_eq!(r.witness_value("s2^2"), Some(&int(900)));
        let r = check_lm_trace_zero(&sp(&[4, 2, -2, -2, -2]));
        assert!(r.satisfied);
        assert_eq!(r.witness_value("4s4"), Some(&int(1280)));
        assert_eq!(r.witness_value("s2^2"), Some(&int(1024)));
        assert!(!check_lm_trace_zero(&sp(&[1, 1, 1, 1, 1])).applicable);
    }

    #[test]
    fn extreme_examples() {
        let r = check_extreme(&sp(&[3, 3, -2, -2, -2]));
        assert!(r.violated());
        assert_eq!(r.witness_value("lhs"), Some(&int(-60)));
        // (7/2, 3, −2, −2, −2): s1 = 1/2, s2 = 133/4, s4 = 4465/16
        let half = Spectrum::new(vec![rat(7, 2), int(3), int(-2), int(-2), int(-2)]).unwrap();
        let (s1, s2, s4) = (rat(1, 2), rat(133, 4), rat(4465, 16));
        let direct = int(4) * &s4 - &s2 * &s2 + &s1 * &s1 * &s2 - num_traits::pow(s1.clone(), 4) / int(2);
        assert_eq!(half.power_sum(2).unwrap(), s2);
        assert_eq!(half.power_sum(4).unwrap(), s4);
        assert_eq!(check_extreme(&half).witness_value("lhs"), Some(&direct));
        assert_eq!(extreme_polynomial_sigma_t().eval(&rat(1, 2)), direct);
        let r = check_extreme(&sp(&[1, 0, 0, 0, 0]));
        assert!(r.satisfied);
        assert_eq!(r.witness_value("lhs"), Some(&rat(7, 2)));
    }

    #[test]
    fn mn_examples() {
        let at = |t: Rational| Spectrum::new(vec![int(3) + &t, int(3) - &t, int(-2), int(-2), int(-2)]).unwrap();
        assert!(check_mn_symmetric(&at(rat(3, 4))).violated());
        let r = check_mn_symmetric(&at(int(1)));
        assert!(r.satisfied);
        assert_eq!(r.witness_value("lambda2+lambda5"), Some(&int(0)));
        let perturbed =
            |t: Rational| Spectrum::new(vec![int(3) + &t, int(3) - &t, rat(-19, 10), int(-2), rat(-21, 10)]).unwrap();
        assert!(check_mn_symmetric(&perturbed(rat(9, 10))).satisfied);
        assert!(check_mn_symmetric(&perturbed(rat(89, 100))).violated());
    }

    #[test]
    fn suleimanova_examples() {
        assert!(check_suleimanova(&sp(&[3, -1, -1, -1])).satisfied);
        assert!(check_suleimanova(&sp(&[1, -2])).violated());
        assert!(!check_suleimanova(&sp(&[3, 3, -2, -2, -2])).applicable);
        assert!(check_suleimanova(&sp(&[2])).satisfied);
    }

    #[test]
    fn diagonalizable_pattern() {
        let r = check_diagonalizable_pattern(&Spectrum::parse(&["15/4", "9/4", "-2", "-2", "-2"]).unwrap());
        assert!(r.violated());
        assert_eq!(r.witness_value("t"), Some(&rat(3, 4)));
        assert!(check_diagonalizable_pattern(&sp(&[4, 2, -2, -2, -2])).satisfied);
        assert!(!check_diagonalizable_pattern(&sp(&[3, 3, -2, -2, -2])).applicable);
        assert!(!check_diagonalizable_pattern(&sp(&[4, 3, -2, -2, -2])).applicable);
    }

    #[test]
    fn replay_reproduces_reports() {
        let s = sp(&[3, 3, -2, -2, -2]);
        for r in [check_lm_trace_zero(&s), check_jll(&s, 4, 4), check_perron(&s)] {
            assert_eq!(r.condition.check(&s), r);
        }
    }

    #[test]
    fn extreme_audit_flags_reference_mismatch() {
        let audit = extreme_threshold_audit(&rat(1, 1_000_000_000)).unwrap();
        // 7/2 t⁴ + 42 t³ + 150 t² + 72 t − 60
        assert_eq!(audit.polynomial, Poly::new(vec![int(-60), int(72), int(150), int(42), rat(7, 2)]));
        assert!((audit.root_estimate - 0.420358703556813).abs() < 1e-9);
        assert!(audit.discrepancy);
    }
}
