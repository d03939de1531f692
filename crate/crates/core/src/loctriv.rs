//! Locally trivial inclusions `A_{K theta} ⊆ A_theta`, decided by
//! membership of `theta` in the parameter families S1 and S2.
//!
//! S1: `(-K(2d-1) ± sqrt(K^2 - 4K)) / 2cK` with `K >= 5`, `gcd(c, d) = 1`
//! and `c | Kd^2 - Kd + 1`.
//! S2: `(-K(2d-1) + 2 - sqrt(K^2 + 4)) / 2cK` with `K != 0`,
//! `gcd(c, d) = 1` and `c | Kd^2 - Kd - 2d + 1`.
//!
//! The corner `qA_theta q` is isomorphic to `A_{K theta}`, so `|K|` is a
//! Morita label of `theta` and in particular divides `k`. That bounds the
//! search.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{divides, divisors, exact_sqrt, ext_gcd};
use crate::error::{Error, Result};
use crate::index::TraceValue;
use crate::quadratic::{QuadraticIrrational, Sign, Unimodular};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    S1,
    S2,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::S1 => "S1",
            Variant::S2 => "S2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtiCertificate {
    pub variant: Variant,
    pub k: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    /// `s` with `(Kc, ..., ...) = s (k, l, m)`.
    pub s: BigInt,
    /// Sign in front of the square root of the closed form. Always `Minus`
    /// for S2.
    pub root_branch: Sign,
    pub label: BigInt,
}

impl LtiCertificate {
    /// `tau(q) = c theta + d`.
    pub fn trace(&self) -> TraceValue {
        TraceValue::new(self.d.clone(), self.c.clone())
    }

    fn sort_key(&self) -> (Variant, &BigInt, &BigInt, &BigInt) {
        (self.variant, &self.k, &self.c, &self.d)
    }
}

/// `(Kc, linear, third * c)` and `c`: the third coefficient before division.
fn coefficient_numerators(variant: Variant, k: &BigInt, c: &BigInt, d: &BigInt) -> (BigInt, BigInt, BigInt) {
    let lead = k * c;
    let base = k * d * d - k * d + BigInt::one();
    match variant {
        Variant::S1 => (lead, k * (BigInt::from(2) * d - BigInt::one()), base),
        Variant::S2 => (lead, BigInt::from(2) * k * d - k - 2, base - BigInt::from(2) * d),
    }
}

/// Radicand of the closed form.
fn radicand(variant: Variant, k: &BigInt) -> BigInt {
    match variant {
        Variant::S1 => k * k - BigInt::from(4) * k,
        Variant::S2 => k * k + BigInt::from(4),
    }
}

fn closed_form(variant: Variant, k: &BigInt, c: &BigInt, d: &BigInt, branch: Sign) -> Result<QuadraticIrrational> {
    let mut p: BigInt = -(k * (BigInt::from(2) * d - BigInt::one()));
    if variant == Variant::S2 {
        p += 2;
    }
    QuadraticIrrational::from_surd(p, branch.to_bigint(), radicand(variant, k), BigInt::from(2) * c * k)
}

/// Exact re-check of every certificate invariant.
pub fn verify_certificate(theta: &QuadraticIrrational, cert: &LtiCertificate) -> bool {
    let LtiCertificate { variant, k, c, d, s, root_branch, label } = cert;
    if c.is_zero() || s.is_zero() || !c.gcd(d).is_one() || *label != k.abs() {
        return false;
    }
    match variant {
        Variant::S1 if k < &BigInt::from(5) => return false,
        Variant::S2 if k.is_zero() || *root_branch != Sign::Minus => return false,
        _ => {}
    }
    let (lead, lin, third_num) = coefficient_numerators(*variant, k, c, d);
    if !divides(c, &third_num) {
        return false;
    }
    let poly = theta.minpoly();
    if lead != s * poly.k() || lin != s * poly.l() || third_num / c != s * poly.m() {
        return false;
    }
    match closed_form(*variant, k, c, d, *root_branch) {
        Ok(x) if x == *theta => {}
        _ => return false,
    }
    let trace = cert.trace();
    trace.cmp_zero(theta) == Ordering::Greater && trace.complement().cmp_zero(theta) == Ordering::Greater
}

/// All certificates for `theta`, sorted by `(variant, K, c, d)`. Empty iff
/// `A_theta` has no locally trivial inclusion.
pub fn find_lti(theta: &QuadraticIrrational) -> Vec<LtiCertificate> {
    let poly = theta.minpoly();
    let (k, l) = (poly.k(), poly.l());
    let disc = theta.discriminant();
    let mut out: Vec<LtiCertificate> = Vec::new();
    for n in divisors(k) {
        for big_k in [n.clone(), -n] {
            for variant in [Variant::S1, Variant::S2] {
                if variant == Variant::S1 && big_k < BigInt::from(5) {
                    continue;
                }
                let rad = radicand(variant, &big_k);
                if !divides(&disc, &rad) {
                    continue;
                }
                let Some(s0) = exact_sqrt(&(&rad / &disc)) else { continue };
                if s0.is_zero() {
                    continue;
                }
                for s in [s0.clone(), -s0] {
                    let d_num = match variant {
                        Variant::S1 => &s * l + &big_k,
                        Variant::S2 => &s * l + &big_k + 2,
                    };
                    let two_k = BigInt::from(2) * &big_k;
                    let c_num = &s * k;
                    if !divides(&two_k, &d_num) || !divides(&big_k, &c_num) {
                        continue;
                    }
                    let d = d_num / two_k;
                    let c = c_num / &big_k;
                    let branches: &[Sign] = match variant {
                        Variant::S1 => &[Sign::Plus, Sign::Minus],
                        Variant::S2 => &[Sign::Minus],
                    };
                    for &root_branch in branches {
                        let cert = LtiCertificate {
                            variant,
                            k: big_k.clone(),
                            c: c.clone(),
                            d: d.clone(),
                            s: s.clone(),
                            root_branch,
                            label: big_k.abs(),
                        };
                        if verify_certificate(theta, &cert) && !out.iter().any(|o| o.sort_key() == cert.sort_key()) {
                            out.push(cert);
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// `|K|`, after checking that `(a theta + b)/(c theta + d) - m'` is exactly
/// `K theta` for a completion `[[a, b], [c, d]]` of determinant 1.
pub fn corner_label(theta: &QuadraticIrrational, cert: &LtiCertificate) -> Result<BigInt> {
    if !verify_certificate(theta, cert) {
        return Err(Error::InvalidCertificate("certificate does not verify".into()));
    }
    let LtiCertificate { variant, k, c, d, .. } = cert;
    // d x + c y = 1  =>  a = x, b = -y gives ad - bc = 1
    let (g, x, y) = ext_gcd(d, c);
    assert!(g.is_one());
    let (a, b) = (x, -y);
    let g = Unimodular::new(a.clone(), b, c.clone(), d.clone())?;
    let mut shift_num = k * d - k + &a;
    if *variant == Variant::S2 {
        shift_num -= 2;
    }
    if !divides(c, &shift_num) {
        return Err(Error::InvalidCertificate(format!("shift {shift_num}/{c} is not an integer")));
    }
    let shift = shift_num / c;
    let value = theta.mobius(&g).translate(&-shift);
    let scaled = theta.scale(&k.abs());
    let expected = if k.is_negative() { scaled.negate() } else { scaled };
    if value != expected {
        return Err(Error::InvalidCertificate(format!("corner parameter {value} is not {k} * theta")));
    }
    Ok(k.abs())
}
