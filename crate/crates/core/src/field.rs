//! Splitting of primes in real quadratic fields, and the consistency check
//! between that splitting and the Morita classification when `k` is prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_prime, is_square, squarefree_decomposition};
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::quadratic::{QuadraticIrrational, Theta};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplittingType {
    Split,
    Ramified,
    Inert,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingType::Split => "split",
            SplittingType::Ramified => "ramified",
            SplittingType::Inert => "inert",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub kind: SplittingType,
    pub fundamental_discriminant: BigInt,
    pub kronecker: i32,
}

/// Discriminant of `Q(sqrt(d))` for non-square `d > 1`.
pub fn fundamental_discriminant(d: &BigInt) -> Result<BigInt> {
    if d <= &BigInt::one() || is_square(d) {
        return Err(Error::DegenerateInput(format!("{d} is not a positive non-square")));
    }
    let (_, core) = squarefree_decomposition(d);
    Ok(if core.mod_floor(&BigInt::from(4)) == BigInt::one() { core } else { core * 4 })
}

/// Kronecker symbol `(a / n)`.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    fn mod8_sign(a: &BigInt) -> i32 {
        match a.mod_floor(&BigInt::from(8)).to_u8().expect("residue") {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        }
    }
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let three = BigInt::from(3);
    if n.is_zero() {
        return i32::from(a.abs().is_one());
    }
    if a.is_even() && n.is_even() {
        return 0;
    }
    let mut a = a.clone();
    let mut b = n.clone();
    let mut k = 1;
    while b.is_even() {
        b /= &two;
        k *= mod8_sign(&a);
    }
    if b.is_negative() {
        b = -b;
        if a.is_negative() {
            k = -k;
        }
    }
    // b is odd and positive
    loop {
        if a.is_zero() {
            return if b.is_one() { k } else { 0 };
        }
        while a.is_even() {
            a /= &two;
            k *= mod8_sign(&b);
        }
        if a.mod_floor(&four) == three && b.mod_floor(&four) == three {
            k = -k;
        }
        let r = a.abs();
        a = b.mod_floor(&r);
        b = r;
    }
}

/// How the prime `p` decomposes in `Q(sqrt(d))`.
pub fn splitting(p: &BigInt, d: &BigInt) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let fd = fundamental_discriminant(d)?;
    let symbol = kronecker(&fd, p);
    let kind = match symbol {
        1 => SplittingType::Split,
        0 => SplittingType::Ramified,
        _ => SplittingType::Inert,
    };
    Ok(Splitting { kind, fundamental_discriminant: fd, kronecker: symbol })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub k: BigInt,
    pub labels: Vec<BigInt>,
    pub splitting: Splitting,
    /// Whether `k` itself is a label.
    pub nontrivial: bool,
    /// Inert forces the labels to be exactly `{1}`.
    pub consistent: bool,
}

/// For prime `k`, the labels are `{1}` or `{1, k}`; an inert `k` rules out
/// the second case.
pub fn check_corollary(theta: &QuadraticIrrational) -> Result<CorollaryReport> {
    let k = theta.minpoly().k().clone();
    if !is_prime(&k) {
        return Err(Error::LeadingCoefficientNotPrime(k));
    }
    let labels = classify(&Theta::Quadratic(theta.clone())).labels();
    let split = splitting(&k, &theta.discriminant())?;
    let nontrivial = labels.contains(&k);
    let shape_ok = labels == [BigInt::one()] || labels == [BigInt::one(), k.clone()];
    let consistent = shape_ok && !(split.kind == SplittingType::Inert && nontrivial);
    Ok(CorollaryReport { k, labels, splitting: split, nontrivial, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::Sign;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Oracle: for odd prime `p`, `(a/p) = #{x mod p : x^2 = a} - 1`.
    fn root_count_symbol(a: i64, p: i64) -> i32 {
        let r = a.rem_euclid(p);
        (0..p).filter(|x| x * x % p == r).count() as i32 - 1
    }

    #[test]
    fn fundamental_discriminant_examples() {
        for (d, fd) in [(5, 5), (12, 12), (8, 8), (45, 5), (20, 5), (48, 12), (13, 13), (60, 60), (3, 12), (2, 8)] {
            assert_eq!(fundamental_discriminant(&b(d)).unwrap(), b(fd), "{d}");
        }
        assert_eq!(fundamental_discriminant(&b(65)).unwrap(), b(65));
        assert!(matches!(fundamental_discriminant(&b(36)), Err(Error::DegenerateInput(_))));
        assert!(matches!(fundamental_discriminant(&b(-3)), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn kronecker_matches_root_counting() {
        let primes = [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        for p in primes {
            for a in -80i64..=80 {
                assert_eq!(kronecker(&b(a), &b(p)), root_count_symbol(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn splitting_depends_only_on_the_field() {
        for p in [2i64, 3, 5, 7, 11, 13] {
            for d in [2i64, 3, 5, 6, 7, 10, 13, 21, 65] {
                let base = splitting(&b(p), &b(d)).unwrap().kind;
                for f in [2i64, 3, 5] {
                    assert_eq!(splitting(&b(p), &b(f * f * d)).unwrap().kind, base);
                }
            }
        }
    }

    #[test]
    fn kronecker_at_two() {
        for a in -40i64..=40 {
            let expect = match a.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            };
            assert_eq!(kronecker(&b(a), &b(2)), expect, "({a}/2)");
        }
    }

    #[test]
    fn kronecker_is_multiplicative_in_the_denominator() {
        for a in -30i64..=30 {
            for m in 1i64..=30 {
                for n in 1i64..=30 {
                    let lhs = kronecker(&b(a), &b(m * n));
                    let rhs = kronecker(&b(a), &b(m)) * kronecker(&b(a), &b(n));
                    assert_eq!(lhs, rhs, "({a}/{m}*{n})");
                }
            }
        }
    }

    #[test]
    fn splitting_examples() {
        let kind = |p, d| splitting(&b(p), &b(d)).unwrap().kind;
        assert_eq!(kind(5, 5), SplittingType::Ramified);
        assert_eq!(kind(11, 5), SplittingType::Split);
        assert_eq!(kind(7, 5), SplittingType::Inert);
        assert_eq!(kind(5, 12), SplittingType::Inert);
        assert_eq!(kind(11, 12), SplittingType::Split);
        assert_eq!(kind(2, 5), SplittingType::Inert);
        assert_eq!(kind(2, 17), SplittingType::Split);
        assert_eq!(kind(2, 12), SplittingType::Ramified);
        assert_eq!(kind(3, 12), SplittingType::Ramified);
        assert!(matches!(splitting(&b(6), &b(5)), Err(Error::NotPrime(_))));
    }

    #[test]
    fn corollary_examples() {
        let x = QuadraticIrrational::from_i64(5, -5, 1, Sign::Plus).unwrap();
        let r = check_corollary(&x).unwrap();
        assert_eq!(r.splitting.kind, SplittingType::Ramified);
        assert!(r.nontrivial && r.consistent);

        let x = QuadraticIrrational::from_i64(5, 5, -2, Sign::Plus).unwrap();
        let r = check_corollary(&x).unwrap();
        assert_eq!(r.splitting.kind, SplittingType::Ramified);
        assert_eq!(r.labels, vec![b(1)]);
        assert!(r.consistent && !r.nontrivial);

        let x = QuadraticIrrational::from_i64(1, 0, -3, Sign::Plus).unwrap();
        assert!(matches!(check_corollary(&x), Err(Error::LeadingCoefficientNotPrime(_))));

        let x = QuadraticIrrational::from_i64(6, -6, 1, Sign::Plus).unwrap();
        assert!(matches!(check_corollary(&x), Err(Error::LeadingCoefficientNotPrime(_))));
    }
}
