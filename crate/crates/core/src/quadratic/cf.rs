use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadraticIrrational, Sign};
use crate::arith::isqrt;

/// Simple continued fraction `[preperiod; period, period, ...]` of a
/// quadratic irrational. `period` is the minimal repeating block and the
/// preperiod is as short as possible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

impl CfExpansion {
    /// The infinite sequence of partial quotients.
    pub fn terms(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.preperiod.iter().chain(self.period.iter().cycle())
    }

    /// Convergent `p/q` after the first `n >= 1` partial quotients.
    pub fn convergent(&self, n: usize) -> (BigInt, BigInt) {
        assert!(n >= 1);
        let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
        let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
        for a in self.terms().take(n) {
            let p = a * &p0 + &p1;
            let q = a * &q0 + &q1;
            p1 = std::mem::replace(&mut p0, p);
            q1 = std::mem::replace(&mut q0, q);
        }
        (p0, q0)
    }

    /// Whether the periodic tails coincide up to rotation.
    pub fn same_tail(&self, other: &CfExpansion) -> bool {
        let n = self.period.len();
        if n != other.period.len() {
            return false;
        }
        (0..n).any(|shift| (0..n).all(|i| self.period[(i + shift) % n] == other.period[i]))
    }
}

/// `(P + sqrt(d)) / Q` with `Q | d - P^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SurdState {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    root: BigInt,
}

impl SurdState {
    pub(crate) fn floor(&self) -> BigInt {
        // floor((P + sqrt d)/Q) = floor(floor(P + sqrt d)/Q) for Q > 0, and
        // for Q < 0 use floor(-P - sqrt d) = -P - isqrt(d) - 1.
        if self.q.is_positive() {
            (&self.p + &self.root).div_floor(&self.q)
        } else {
            (-&self.p - &self.root - BigInt::one()).div_floor(&-&self.q)
        }
    }

    fn step(&self, a: &BigInt) -> SurdState {
        let p = a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        SurdState { p, q, d: self.d.clone(), root: self.root.clone() }
    }
}

impl QuadraticIrrational {
    pub(crate) fn continued_fraction_state(&self) -> SurdState {
        let (k, l, _) = self.minpoly().coefficients();
        let d = self.discriminant();
        let root = isqrt(&d);
        let two_k = BigInt::from(2) * k;
        // (-l + sqrt D)/2k, or (-l - sqrt D)/2k = (l + sqrt D)/(-2k)
        let (p, q) = match self.branch() {
            Sign::Plus => (-l, two_k),
            Sign::Minus => (l.clone(), -two_k),
        };
        SurdState { p, q, d, root }
    }

    /// Exact expansion via `(P + sqrt D)/Q` states; the first repeated state
    /// closes the period.
    pub fn continued_fraction(&self) -> CfExpansion {
        let mut state = self.continued_fraction_state();
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut terms = Vec::new();
        loop {
            if let Some(&start) = seen.get(&(state.p.clone(), state.q.clone())) {
                let period = terms.split_off(start);
                return CfExpansion { preperiod: terms, period };
            }
            seen.insert((state.p.clone(), state.q.clone()), terms.len());
            let a = state.floor();
            state = state.step(&a);
            terms.push(a);
        }
    }
}
