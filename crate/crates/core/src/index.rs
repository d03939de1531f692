//! Trace bookkeeping for projections in `A_theta`, the finite partition of
//! a large projection used to build a quasi-basis, and the resulting
//! Watatani index values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quadratic::QuadraticIrrational;

/// `u + v theta` with integer `u`, `v`: the traces of projections in
/// `A_theta` lie in `Z + Z theta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceValue {
    pub u: BigInt,
    pub v: BigInt,
}

impl TraceValue {
    pub fn new(u: BigInt, v: BigInt) -> Self {
        TraceValue { u, v }
    }

    pub fn from_i64(u: i64, v: i64) -> Self {
        TraceValue { u: u.into(), v: v.into() }
    }

    pub fn integer(u: BigInt) -> Self {
        TraceValue { u, v: BigInt::zero() }
    }

    pub fn one() -> Self {
        Self::integer(BigInt::one())
    }

    pub fn zero() -> Self {
        Self::integer(BigInt::zero())
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        TraceValue { u: &self.u * n, v: &self.v * n }
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Self::one() - self.clone()
    }

    /// Exact sign of the value at `theta`.
    pub fn cmp_zero(&self, theta: &QuadraticIrrational) -> Ordering {
        theta.sign_of_affine(&self.u, &self.v)
    }

    pub fn cmp_at(&self, other: &Self, theta: &QuadraticIrrational) -> Ordering {
        (self.clone() - other.clone()).cmp_zero(theta)
    }
}

impl Add for TraceValue {
    type Output = TraceValue;
    fn add(self, rhs: TraceValue) -> TraceValue {
        TraceValue { u: self.u + rhs.u, v: self.v + rhs.v }
    }
}

impl Sub for TraceValue {
    type Output = TraceValue;
    fn sub(self, rhs: TraceValue) -> TraceValue {
        TraceValue { u: self.u - rhs.u, v: self.v - rhs.v }
    }
}

impl std::iter::Sum for TraceValue {
    fn sum<I: Iterator<Item = TraceValue>>(iter: I) -> TraceValue {
        iter.fold(TraceValue::zero(), |a, b| a + b)
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*theta", self.u, self.v)
    }
}

/// `0 <= t <= 1` at `theta`.
pub fn trace_in_range(t: &TraceValue, theta: &QuadraticIrrational) -> bool {
    t.cmp_zero(theta) != Ordering::Less && t.complement().cmp_zero(theta) != Ordering::Less
}

/// Partition of a projection `q` with `1/2 < tau(q) < 1` into `n` mutually
/// orthogonal subprojections: the first `n - 1` are equivalent to `1 - q`,
/// the last is the remainder, which has trace strictly below `tau(1 - q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPlan {
    pub trace_q: TraceValue,
    pub n: usize,
    pub parts: Vec<TraceValue>,
    pub complement: TraceValue,
    pub quasi_basis_size: usize,
}

pub fn partition(trace_q: &TraceValue, theta: &QuadraticIrrational) -> Result<PartitionPlan> {
    let half_lt = trace_q.scale(&BigInt::from(2)).cmp_at(&TraceValue::one(), theta) == Ordering::Greater;
    let lt_one = trace_q.complement().cmp_zero(theta) == Ordering::Greater;
    if !half_lt || !lt_one {
        return Err(Error::TraceOutOfRange { u: trace_q.u.clone(), v: trace_q.v.clone() });
    }
    let r = trace_q.complement();
    let remainder_after = |k: &BigInt| trace_q.clone() - r.scale(k);
    // largest k with tau(q) - k tau(1-q) > 0; exists since tau(q) > tau(1-q)
    let positive = |k: &BigInt| remainder_after(k).cmp_zero(theta) == Ordering::Greater;
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while positive(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if positive(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let k = lo;
    let last = remainder_after(&k);
    if last.cmp_at(&r, theta) != Ordering::Less {
        return Err(Error::InvalidPlan("remainder is not smaller than tau(1 - q)".into()));
    }
    let copies: usize = k.try_into().map_err(|_| Error::InvalidPlan("partition too large".into()))?;
    let mut parts = vec![r.clone(); copies];
    parts.push(last);
    let n = copies + 1;
    Ok(PartitionPlan { trace_q: trace_q.clone(), n, parts, complement: r, quasi_basis_size: n + 3 })
}

/// One `u_i u_i^*` term of the quasi-basis, reduced to a multiple of a
/// projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Term {
    Q,
    OneMinusQ,
    Part(usize),
}

/// `sum_i u_i u_i^*` over the quasi-basis built from `plan`, returned as the
/// integer it equals. Each term is `2 p` for a projection `p`; the sum is
/// formed symbolically over `{1, q}` after the parts are recombined into `q`,
/// then cross-checked by applying the trace.
pub fn quasi_basis_ledger(plan: &PartitionPlan) -> Result<BigInt> {
    let bad = |msg: &str| Err(Error::InvalidPlan(msg.into()));
    if plan.n < 2 || plan.parts.len() != plan.n {
        return bad("need at least two parts");
    }
    if plan.complement != plan.trace_q.complement() {
        return bad("complement does not match tau(q)");
    }
    if plan.parts[..plan.n - 1].iter().any(|p| *p != plan.complement) {
        return bad("leading parts must be equivalent to 1 - q");
    }
    if plan.parts.iter().cloned().sum::<TraceValue>() != plan.trace_q {
        return bad("parts do not sum to tau(q)");
    }
    let mut terms = vec![Term::Q, Term::OneMinusQ, Term::OneMinusQ];
    terms.extend((0..plan.n).map(Term::Part));
    if terms.len() != plan.quasi_basis_size {
        return bad("quasi-basis size is not n + 3");
    }

    // coefficients of 1 and q; the parts occur once each, so together they give q
    let (mut one, mut q) = (BigInt::zero(), BigInt::zero());
    let two = BigInt::from(2);
    let mut parts_seen = 0usize;
    for t in &terms {
        match t {
            Term::Q => q += &two,
            Term::OneMinusQ => {
                one += &two;
                q -= &two;
            }
            Term::Part(_) => parts_seen += 1,
        }
    }
    if parts_seen != plan.n {
        return bad("each part must occur once");
    }
    q += &two;
    if !q.is_zero() {
        return bad("sum is not a scalar");
    }

    let traced: TraceValue = terms
        .iter()
        .map(|t| match t {
            Term::Q => plan.trace_q.scale(&two),
            Term::OneMinusQ => plan.complement.scale(&two),
            Term::Part(i) => plan.parts[*i].scale(&two),
        })
        .sum();
    if traced != TraceValue::integer(one.clone()) {
        return bad("trace of the sum disagrees");
    }
    Ok(one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InclusionKind {
    /// `A_{theta}` inside `A_theta` through a locally trivial embedding.
    LocallyTrivial,
    /// `A_{n theta}` inside `A_theta` through the power embedding.
    PowerSubalgebra(BigInt),
}

pub fn minimal_index(kind: &InclusionKind) -> BigRational {
    match kind {
        InclusionKind::LocallyTrivial => BigRational::from_integer(BigInt::from(4)),
        InclusionKind::PowerSubalgebra(n) => {
            assert!(n >= &BigInt::one(), "label must be positive");
            BigRational::from_integer(n.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::quadratic::Sign;

    fn golden() -> QuadraticIrrational {
        // (sqrt 5 - 1)/2 ~ 0.618
        QuadraticIrrational::from_i64(1, 1, -1, Sign::Plus).unwrap()
    }

    fn theta(k: i64, l: i64, m: i64) -> QuadraticIrrational {
        QuadraticIrrational::from_i64(k, l, m, Sign::Plus).unwrap()
    }

    #[test]
    fn range_and_partition_examples() {
        // (5 + sqrt 5)/10
        let t = theta(5, -5, 1);
        assert!(trace_in_range(&TraceValue::from_i64(0, 1), &t));
        assert!(trace_in_range(&TraceValue::from_i64(-2, 3), &t));
        assert!(!trace_in_range(&TraceValue::from_i64(5, -5), &t));
        let plan = partition(&TraceValue::from_i64(0, 1), &t).unwrap();
        assert_eq!(plan.n, 3);
        let c = TraceValue::from_i64(1, -1);
        assert_eq!(plan.parts, vec![c.clone(), c, TraceValue::from_i64(-2, 3)]);
        assert_eq!(plan.quasi_basis_size, 6);
        assert!(plan.parts.iter().all(|p| trace_in_range(p, &t)));
        assert!(matches!(partition(&TraceValue::from_i64(1, -1), &t), Err(Error::TraceOutOfRange { .. })));

        // (3 + sqrt 3)/6
        let t = theta(6, -6, 1);
        let plan = partition(&TraceValue::from_i64(0, 1), &t).unwrap();
        assert_eq!(plan.n, 4);
        assert_eq!(plan.parts[3], TraceValue::from_i64(-3, 4));
        assert_eq!(plan.quasi_basis_size, 7);
    }

    #[test]
    fn trace_range_examples() {
        let t = golden();
        assert!(trace_in_range(&TraceValue::from_i64(0, 1), &t));
        assert!(trace_in_range(&TraceValue::from_i64(1, -1), &t));
        assert!(!trace_in_range(&TraceValue::from_i64(-1, 1), &t));
        assert!(trace_in_range(&TraceValue::from_i64(1, 0), &t));
        assert!(trace_in_range(&TraceValue::from_i64(0, 0), &t));
        assert!(!trace_in_range(&TraceValue::from_i64(2, -1), &t));
    }

    #[test]
    fn partition_of_golden_trace() {
        let t = golden();
        let plan = partition(&TraceValue::from_i64(0, 1), &t).unwrap();
        // 0.618 = 0.382 + 0.236
        assert_eq!(plan.n, 2);
        assert_eq!(plan.parts, vec![TraceValue::from_i64(1, -1), TraceValue::from_i64(-1, 2)]);
        assert_eq!(plan.quasi_basis_size, 5);
        assert_eq!(quasi_basis_ledger(&plan).unwrap(), BigInt::from(4));
    }

    #[test]
    fn partition_close_to_one() {
        let t = golden();
        let tq = TraceValue::from_i64(1, 0) - TraceValue::from_i64(0, 1);
        assert!(partition(&tq, &t).is_err(), "0.382 is below one half");
        // theta ~ 0.0099990, tau(q) = 1 - theta
        let small = QuadraticIrrational::from_i64(1, 100, -1, Sign::Plus).unwrap();
        let tq = TraceValue::from_i64(1, -1);
        let plan = partition(&tq, &small).unwrap();
        let theta = Interval::enclose(&small, 80);
        let q = Interval::int(&BigInt::one()).sub(&theta);
        let r = theta.clone();
        let k = plan.n - 1;
        let rem = q.sub(&r.mul(&Interval::int(&BigInt::from(k))));
        assert!(rem.is_positive());
        assert!(r.sub(&rem).is_positive());
        assert_eq!(k, 99);
        assert_eq!(quasi_basis_ledger(&plan).unwrap(), BigInt::from(4));
    }

    #[test]
    fn partition_rejects_out_of_range() {
        let t = golden();
        for (u, v) in [(0, 0), (1, 0), (-1, 1), (2, -1)] {
            assert!(matches!(partition(&TraceValue::from_i64(u, v), &t), Err(Error::TraceOutOfRange { .. })));
        }
    }

    #[test]
    fn ledger_rejects_tampered_plans() {
        let t = golden();
        let plan = partition(&TraceValue::from_i64(0, 1), &t).unwrap();
        let mut p = plan.clone();
        p.parts[1] = TraceValue::from_i64(0, 1);
        assert!(quasi_basis_ledger(&p).is_err());
        let mut p = plan.clone();
        p.quasi_basis_size = 4;
        assert!(quasi_basis_ledger(&p).is_err());
        let mut p = plan;
        p.n = 1;
        assert!(quasi_basis_ledger(&p).is_err());
    }

    #[test]
    fn minimal_index_values() {
        assert_eq!(minimal_index(&InclusionKind::LocallyTrivial), BigRational::from_integer(4.into()));
        assert_eq!(minimal_index(&InclusionKind::PowerSubalgebra(5.into())), BigRational::from_integer(5.into()));
        assert_eq!(minimal_index(&InclusionKind::PowerSubalgebra(3.into())), BigRational::from_integer(3.into()));
        assert_eq!(minimal_index(&InclusionKind::PowerSubalgebra(1.into())), BigRational::from_integer(1.into()));
    }
}
