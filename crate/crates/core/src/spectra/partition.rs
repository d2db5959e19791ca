use super::conditions::{check_jll, check_perron, check_power_sums};
use super::Spectrum;
use crate::error::{domain, Result};

/// An unordered split of a spectrum into two nonempty sublists, stored with
/// the larger sublist (in [`Spectrum`] order) first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub first: Spectrum,
    pub second: Spectrum,
}

impl Bipartition {
    pub fn new(a: Spectrum, b: Spectrum) -> Self {
        if a >= b {
            Self { first: a, second: b }
        } else {
            Self { first: b, second: a }
        }
    }

    pub fn swapped(&self) -> (Spectrum, Spectrum) {
        (self.second.clone(), self.first.clone())
    }
}

pub const SCAN_DEPTH: u32 = 6;

/// Necessary conditions a sublist must pass to be a direct summand.
pub fn part_viable(part: &Spectrum) -> bool {
    check_perron(part).satisfied
        && check_power_sums(part, SCAN_DEPTH).satisfied
        && check_jll(part, SCAN_DEPTH, SCAN_DEPTH).satisfied
}

/// All `2^(n−1) − 1` unordered bipartitions whose parts are both viable,
/// deduplicated and sorted.
pub fn reducible_partition_scan(sp: &Spectrum) -> Result<Vec<Bipartition>> {
    Ok(scan(sp)?.0)
}

/// Viable bipartitions plus the number of index splits examined.
pub(crate) fn scan(sp: &Spectrum) -> Result<(Vec<Bipartition>, usize)> {
    let n = sp.n();
    if n < 2 {
        return Err(domain("a partition scan needs at least two values"));
    }
    if n > 24 {
        return Err(domain("partition scan is limited to 24 values"));
    }
    let v = sp.values();
    let mut out = Vec::new();
    let splits = (1usize << (n - 1)) - 1;
    for mask in 1..=splits {
        // index 0 always stays in the first part
        let (mut a, mut b) = (vec![v[0].clone()], Vec::new());
        for (i, x) in v.iter().enumerate().skip(1) {
            if mask & (1 << (i - 1)) != 0 {
                b.push(x.clone());
            } else {
                a.push(x.clone());
            }
        }
        let (a, b) = (Spectrum::new(a)?, Spectrum::new(b)?);
        if part_viable(&a) && part_viable(&b) {
            out.push(Bipartition::new(a, b));
        }
    }
    out.sort();
    out.dedup();
    Ok((out, splits))
}
