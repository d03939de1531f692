//! Integer helpers shared by the solvers: square roots, gcds, divisors and
//! trial-division factorization. Inputs here are desk-scale; nothing is
//! asymptotically clever.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number {n}");
    n.sqrt()
}

/// Returns the square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g` and `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive(), "divisors of non-positive number {n}");
    if let Some(small) = n.to_u64() {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        let mut i = 1u64;
        while i.saturating_mul(i) <= small {
            if small % i == 0 {
                lo.push(i);
                if i != small / i {
                    hi.push(small / i);
                }
            }
            i += 1;
        }
        return lo.into_iter().chain(hi.into_iter().rev()).map(BigInt::from).collect();
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if n.is_multiple_of(&i) {
            let q = n / &i;
            if q != i {
                hi.push(q);
            }
            lo.push(i.clone());
        }
        i += 1;
    }
    lo.into_iter().chain(hi.into_iter().rev()).collect()
}

pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
        if small % 2 == 0 {
            return false;
        }
        let mut i = 3u64;
        while i.saturating_mul(i) <= small {
            if small % i == 0 {
                return false;
            }
            i += 2;
        }
        return true;
    }
    let two = BigInt::from(2);
    if n.is_multiple_of(&two) {
        return false;
    }
    let mut i = BigInt::from(3);
    while &i * &i <= *n {
        if n.is_multiple_of(&i) {
            return false;
        }
        i += &two;
    }
    true
}

/// Writes `n = f^2 * core` with `core` squarefree, for `n > 0`.
pub fn squarefree_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rest = n.clone();
    let mut square_part = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square_part *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !rest.is_one() {
        core *= rest;
    }
    (square_part, core)
}

/// `b != 0` and `b | a`.
pub fn divides(b: &BigInt, a: &BigInt) -> bool {
    !b.is_zero() && a.is_multiple_of(b)
}
