//! Real root counting and isolation with Sturm sequences.

use num_traits::{One, Signed, Zero};

use super::field::ratio_to_f64;
use super::{int, Poly, Rational};
use crate::error::{domain, Result};

/// Rational interval `(lo, hi]` holding exactly one real root of the
/// polynomial it was isolated for.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub root_count: usize,
}

impl IsolatingInterval {
    fn new(lo: Rational, hi: Rational) -> Self {
        Self { lo, hi, root_count: 1 }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn midpoint_f64(&self) -> f64 {
        ratio_to_f64(&self.midpoint())
    }

    /// Whether `x` lies in `(lo, hi]`.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

/// Canonical Sturm chain `p, p', −rem(p, p'), …`, each member scaled to its
/// primitive part (a positive multiple, so signs are unchanged).
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(domain("Sturm sequence of the zero polynomial"));
        }
        let mut chain = vec![p.primitive_part()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive_part());
        }
        Ok(Self { chain })
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                continue;
            } else if v.is_negative() {
                -1
            } else {
                1
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign changes as `x → +∞` (from leading coefficients).
    fn variations_at_infinity(&self, negative: bool) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let lead = p.leading().expect("chain members are nonzero");
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            let mut s = if lead.is_negative() { -1 } else { 1 };
            if negative && odd {
                s = -s;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots.
    pub fn total_real_roots(&self) -> usize {
        self.variations_at_infinity(true) - self.variations_at_infinity(false)
    }
}

/// Removes every factor `(x − c)` from `p`; returns the deflated polynomial
/// and whether `c` was a root.
fn deflate(p: &Poly, c: &Rational) -> (Poly, bool) {
    let lin = Poly::new(vec![-c.clone(), Rational::one()]);
    let mut q = p.clone();
    let mut hit = false;
    while !q.is_zero() && q.eval(c).is_zero() {
        q = q.div_rem(&lin).expect("nonzero divisor").0;
        hit = true;
    }
    (q, hit)
}

/// Exact number of distinct real roots of `p` in `(lo, hi]`.
///
/// Endpoints that are roots are divided out before the Sturm count, so the
/// half-open convention is honored exactly.
pub fn sturm_root_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(domain("root count of the zero polynomial"));
    }
    if lo >= hi {
        return Err(domain(format!("empty interval ({lo}, {hi}]")));
    }
    let (q, hi_root) = deflate(p, hi);
    let (q, _) = deflate(&q, lo);
    let inner = if q.degree().unwrap_or(0) == 0 {
        0
    } else {
        let seq = SturmSequence::new(&q)?;
        seq.variations_at(lo) - seq.variations_at(hi)
    };
    Ok(inner + usize::from(hi_root))
}

/// Cauchy bound: every real root lies in `(−B, B)`.
pub fn root_bound(p: &Poly) -> Rational {
    let coeffs = p.coeffs();
    let lead = coeffs.last().expect("nonzero polynomial").abs();
    let max =
        coeffs[..coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |m, v| if v > m { v } else { m });
    Rational::one() + max
}

/// Bisects `(lo, hi]`, known to hold exactly one root, down to width ≤ eps.
pub fn refine(p: &Poly, interval: &IsolatingInterval, eps: &Rational) -> Result<IsolatingInterval> {
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) / int(2);
        if sturm_root_count(p, &lo, &mid)? >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(IsolatingInterval::new(lo, hi))
}

fn check_eps(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(domain(format!("precision must be positive, got {eps}")))
    }
}

/// Interval of width ≤ eps around the smallest real root `≥ 0`, or `None`
/// when `p` has no nonnegative real root.
pub fn isolate_smallest_nonneg_root(p: &Poly, eps: &Rational) -> Result<Option<IsolatingInterval>> {
    if p.is_zero() {
        return Err(domain("root isolation of the zero polynomial"));
    }
    check_eps(eps)?;
    let zero = Rational::zero();
    if p.eval(&zero).is_zero() {
        let mut w = eps.clone();
        while sturm_root_count(p, &-w.clone(), &zero)? > 1 {
            w /= int(2);
        }
        return Ok(Some(IsolatingInterval::new(-w, zero)));
    }
    let bound = root_bound(p);
    if sturm_root_count(p, &zero, &bound)? == 0 {
        return Ok(None);
    }
    let (mut lo, mut hi) = (zero, bound);
    loop {
        let count = sturm_root_count(p, &lo, &hi)?;
        if count == 1 && &(&hi - &lo) <= eps {
            return Ok(Some(IsolatingInterval::new(lo, hi)));
        }
        let mid = (&lo + &hi) / int(2);
        if sturm_root_count(p, &lo, &mid)? >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Isolating intervals of width ≤ eps for every distinct real root, in
/// increasing order.
pub fn isolate_real_roots(p: &Poly, eps: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(domain("root isolation of the zero polynomial"));
    }
    check_eps(eps)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let bound = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm_root_count(p, &lo, &hi)? {
            0 => {}
            1 if &(&hi - &lo) <= eps => out.push(IsolatingInterval::new(lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                // push upper half first so the lower half is processed first
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    Ok(out)
}

/// Isolated real roots restricted to `[0, ∞)`.
pub fn isolate_nonneg_roots(p: &Poly, eps: &Rational) -> Result<Vec<IsolatingInterval>> {
    let zero = Rational::zero();
    let mut roots = Vec::new();
    if p.eval(&zero).is_zero() {
        if let Some(iv) = isolate_smallest_nonneg_root(p, eps)? {
            roots.push(iv);
        }
    }
    let (q, _) = deflate(p, &zero);
    if q.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }
    let bound = root_bound(&q);
    let mut stack = vec![(zero, bound)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match sturm_root_count(&q, &lo, &hi)? {
            0 => {}
            1 if &(&hi - &lo) <= eps => found.push(IsolatingInterval::new(lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    roots.extend(found);
    Ok(roots)
}
