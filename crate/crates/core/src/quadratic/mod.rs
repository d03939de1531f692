//! Exact real quadratic irrationals.
//!
//! A value is stored as its primitive minimal polynomial `k x^2 + l x + m`
//! (with `k > 0`) together with a branch selecting one of the two real
//! roots `(-l ± sqrt(D)) / 2k`, `D = l^2 - 4km`. `Sign::Plus` is always the
//! larger root. Every constructor normalizes, so structural equality is
//! numerical equality.

mod cf;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd3, is_square};
use crate::error::{Error, Result};

pub use cf::CfExpansion;

/// A choice of `+1` or `-1`: a root branch, a determinant, or the right-hand
/// side of a unit equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Sign of a nonzero integer.
    pub fn of(x: &BigInt) -> Sign {
        assert!(!x.is_zero(), "sign of zero");
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `Some` for exactly `+1` and `-1`.
    pub fn from_unit(x: &BigInt) -> Option<Sign> {
        if x.is_one() {
            Some(Sign::Plus)
        } else if *x == -BigInt::one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.to_i32())
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Primitive integer relation `k x^2 + l x + m = 0` with `k > 0` and a
/// positive non-square discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinimalPolynomial {
    k: BigInt,
    l: BigInt,
    m: BigInt,
}

impl MinimalPolynomial {
    /// Validates an already-canonical triple. Use
    /// [`QuadraticIrrational::normalize`] to canonicalize arbitrary input.
    pub fn new(k: BigInt, l: BigInt, m: BigInt) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::DegenerateInput(format!("leading coefficient {k} is not positive")));
        }
        if !gcd3(&k, &l, &m).is_one() {
            return Err(Error::DegenerateInput(format!("({k}, {l}, {m}) is not primitive")));
        }
        let p = MinimalPolynomial { k, l, m };
        check_discriminant(&p.discriminant())?;
        Ok(p)
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn l(&self) -> &BigInt {
        &self.l
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// `l^2 - 4km`.
    pub fn discriminant(&self) -> BigInt {
        &self.l * &self.l - BigInt::from(4) * &self.k * &self.m
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.k, &self.l, &self.m)
    }
}

impl fmt::Display for MinimalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.k, self.l, self.m)
    }
}

fn check_discriminant(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::DegenerateInput(format!("discriminant {d} is not positive")));
    }
    if is_square(d) {
        return Err(Error::DegenerateInput(format!("discriminant {d} is a perfect square")));
    }
    Ok(())
}

/// An element of GL(2,Z).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Unimodular {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Unimodular {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if Sign::from_unit(&det).is_none() {
            return Err(Error::NotUnimodular { a, b, c, d });
        }
        Ok(Unimodular { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Unimodular { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    /// Translation `x -> x + t`.
    pub fn shift(t: BigInt) -> Self {
        Unimodular { a: BigInt::one(), b: t, c: BigInt::zero(), d: BigInt::one() }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn det(&self) -> Sign {
        Sign::from_unit(&(&self.a * &self.d - &self.b * &self.c)).expect("unimodular invariant")
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Unimodular) -> Unimodular {
        Unimodular {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn inverse(&self) -> Unimodular {
        let s = self.det().to_bigint();
        Unimodular { a: &s * &self.d, b: -(&s * &self.b), c: -(&s * &self.c), d: &s * &self.a }
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }
}

impl fmt::Display for Unimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A real quadratic irrational `(-l + branch * sqrt(D)) / 2k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    poly: MinimalPolynomial,
    branch: Sign,
}

impl QuadraticIrrational {
    /// Canonical form of the root of `k x^2 + l x + m` selected by `branch`
    /// (`Plus` picks `(-l + sqrt(D)) / 2k` for the triple as given). A
    /// negative `k` is absorbed by flipping all signs and the branch, so the
    /// selected real number never changes.
    pub fn normalize(k: BigInt, l: BigInt, m: BigInt, branch: Sign) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::DegenerateInput("leading coefficient is zero".into()));
        }
        let d = &l * &l - BigInt::from(4) * &k * &m;
        check_discriminant(&d)?;
        let (k, l, m, branch) = if k.is_negative() { (-k, -l, -m, -branch) } else { (k, l, m, branch) };
        let g = gcd3(&k, &l, &m);
        let poly = MinimalPolynomial { k: k / &g, l: l / &g, m: m / &g };
        Ok(QuadraticIrrational { poly, branch })
    }

    pub fn from_i64(k: i64, l: i64, m: i64, branch: Sign) -> Result<Self> {
        Self::normalize(k.into(), l.into(), m.into(), branch)
    }

    pub fn new(poly: MinimalPolynomial, branch: Sign) -> Self {
        QuadraticIrrational { poly, branch }
    }

    /// `(p + q*sqrt(n)) / r`.
    pub fn from_surd(p: BigInt, q: BigInt, n: BigInt, r: BigInt) -> Result<Self> {
        if q.is_zero() || r.is_zero() {
            return Err(Error::DegenerateInput("surd is rational".into()));
        }
        if n < BigInt::from(2) || is_square(&n) {
            return Err(Error::DegenerateInput(format!("radicand {n} is not a non-square >= 2")));
        }
        // r x - p = q sqrt(n)  =>  r^2 x^2 - 2pr x + p^2 - q^2 n = 0; the
        // sqrt coefficient of x has the sign of q*r.
        let branch = Sign::of(&q) * Sign::of(&r);
        let k = &r * &r;
        let l = BigInt::from(-2) * &p * &r;
        let m = &p * &p - &q * &q * n;
        Self::normalize(k, l, m, branch)
    }

    pub fn minpoly(&self) -> &MinimalPolynomial {
        &self.poly
    }

    pub fn branch(&self) -> Sign {
        self.branch
    }

    pub fn discriminant(&self) -> BigInt {
        self.poly.discriminant()
    }

    /// The other root of the minimal polynomial.
    pub fn conjugate(&self) -> Self {
        QuadraticIrrational { poly: self.poly.clone(), branch: -self.branch }
    }

    /// `-x`.
    pub fn negate(&self) -> Self {
        let MinimalPolynomial { k, l, m } = &self.poly;
        QuadraticIrrational { poly: MinimalPolynomial { k: k.clone(), l: -l, m: m.clone() }, branch: -self.branch }
    }

    /// `(a x + b) / (c x + d)`.
    pub fn mobius(&self, g: &Unimodular) -> Self {
        let MinimalPolynomial { k, l, m } = &self.poly;
        let Unimodular { a, b, c, d } = g;
        // Substitute x = (d y - b) / (-c y + a) and clear denominators.
        let lead = k * d * d - l * c * d + m * c * c;
        let lin = BigInt::from(-2) * k * b * d + l * (a * d + b * c) - BigInt::from(2) * m * a * c;
        let cst = k * b * b - l * a * b + m * a * a;
        Self::normalize(lead, lin, cst, self.branch * g.det())
            .expect("GL(2,Z) preserves the discriminant")
    }

    /// `n * x` for `n >= 1`.
    pub fn scale(&self, n: &BigInt) -> Self {
        assert!(n.is_positive(), "scale factor must be positive, got {n}");
        let MinimalPolynomial { k, l, m } = &self.poly;
        Self::normalize(k.clone(), l * n, m * n * n, self.branch).expect("scaling preserves irrationality")
    }

    /// `x + t`.
    pub fn translate(&self, t: &BigInt) -> Self {
        self.mobius(&Unimodular::shift(t.clone()))
    }

    /// Exact sign of `u + v x`.
    pub fn sign_of_affine(&self, u: &BigInt, v: &BigInt) -> Ordering {
        let MinimalPolynomial { k, l, .. } = &self.poly;
        // u + v x = (2ku - vl + v*branch*sqrt(D)) / 2k with 2k > 0.
        let rational = BigInt::from(2) * k * u - v * l;
        let irrational = v * self.branch.to_bigint();
        sign_of_surd(&rational, &irrational, &self.discriminant())
    }

    /// Exact `floor(x)`.
    pub fn floor(&self) -> BigInt {
        self.continued_fraction_state().floor()
    }

    /// Checks symbolically that the selected root annihilates the minimal
    /// polynomial: with `x = (P + Q sqrt(D)) / R`, both rational and
    /// irrational parts of `R^2 (k x^2 + l x + m)` vanish.
    pub fn is_exact_root(&self) -> bool {
        let MinimalPolynomial { k, l, m } = &self.poly;
        let d = self.discriminant();
        let p = -l;
        let q = self.branch.to_bigint();
        let r = BigInt::from(2) * k;
        let rational = k * (&p * &p + &q * &q * &d) + l * &p * &r + m * &r * &r;
        let irrational = k * BigInt::from(2) * &p * &q + l * &q * &r;
        rational.is_zero() && irrational.is_zero()
    }

    /// Whether some element of GL(2,Z) maps `self` to `other`. Decided by
    /// comparing periodic continued-fraction tails up to rotation.
    pub fn gl2z_equivalent(&self, other: &Self) -> bool {
        if self.discriminant() != other.discriminant() {
            return false;
        }
        let target = other.continued_fraction();
        [self.continued_fraction(), self.negate().continued_fraction()]
            .iter()
            .any(|cf| cf.same_tail(&target))
    }

    /// `surd:(p+q*sqrt(N))/r` form with `N = D`.
    pub fn to_surd_spec(&self) -> String {
        let MinimalPolynomial { k, l, .. } = &self.poly;
        let q = self.branch.to_i32();
        format!("surd:({}{}{}*sqrt({}))/{}", -l, if q > 0 { '+' } else { '-' }, 1, self.discriminant(), BigInt::from(2) * k)
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly:{},{}", self.poly, self.branch)
    }
}

/// Sign of `x + y sqrt(d)` for non-square `d > 0`.
pub(crate) fn sign_of_surd(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let sx = x.sign();
    let sy = y.sign();
    use num_bigint::Sign as S;
    match (sx, sy) {
        (_, S::NoSign) => x.cmp(&BigInt::zero()),
        (S::NoSign, _) => y.cmp(&BigInt::zero()),
        (S::Plus, S::Plus) => Ordering::Greater,
        (S::Minus, S::Minus) => Ordering::Less,
        (S::Plus, S::Minus) => (x * x).cmp(&(y * y * d)),
        (S::Minus, S::Plus) => (y * y * d).cmp(&(x * x)),
    }
}

/// Input to the classifier: an exact quadratic irrational, or an explicit
/// marker for a parameter that is irrational but not quadratic (which has no
/// finite exact representation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theta {
    Quadratic(QuadraticIrrational),
    NonQuadratic,
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Quadratic(x) => x.fmt(f),
            Theta::NonQuadratic => f.write_str("nonquadratic"),
        }
    }
}
