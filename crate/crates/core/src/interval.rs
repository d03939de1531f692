//! Rational interval enclosures of quadratic irrationals.
//!
//! Cross-check oracle only: nothing in the decision procedures consults an
//! interval. `sqrt(D)` is bracketed from the integer square root of
//! `D * 4^bits`, and all further arithmetic is exact on the endpoints, so an
//! enclosure never loses the true value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::isqrt;
use crate::quadratic::{QuadraticIrrational, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn int(x: &BigInt) -> Self {
        Self::point(BigRational::from_integer(x.clone()))
    }

    /// `sqrt(n)` for `n >= 0`, with endpoint denominators `2^bits`.
    pub fn sqrt_int(n: &BigInt, bits: u32) -> Self {
        let scale = BigInt::one() << bits;
        let s = isqrt(&(n << (2 * bits)));
        let lo = BigRational::new(s.clone(), scale.clone());
        let hi = if &s * &s == (n << (2 * bits)) { lo.clone() } else { BigRational::new(s + 1, scale) };
        Interval { lo, hi }
    }

    /// Encloses `x` with roughly `bits` bits of precision.
    pub fn enclose(x: &QuadraticIrrational, bits: u32) -> Self {
        let (k, l, _) = x.minpoly().coefficients();
        let root = Self::sqrt_int(&x.discriminant(), bits);
        let root = match x.branch() {
            Sign::Plus => root,
            Sign::Minus => root.neg(),
        };
        root.add(&Self::int(&-l)).div(&Self::int(&(BigInt::from(2) * k)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, rhs: &Interval) -> Self {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    pub fn sub(&self, rhs: &Interval) -> Self {
        self.add(&rhs.neg())
    }

    pub fn sub_int(&self, n: &BigInt) -> Self {
        self.sub(&Self::int(n))
    }

    pub fn mul(&self, rhs: &Interval) -> Self {
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn recip(&self) -> Self {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of an interval containing zero"
        );
        Interval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub fn div(&self, rhs: &Interval) -> Self {
        self.mul(&rhs.recip())
    }

    /// Whether every point of the interval is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }
}
