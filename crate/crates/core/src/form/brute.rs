use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive};

use super::QuadraticForm;

/// Smallest `(x, y)` with `f(x, y) = rhs`, scanning radius
/// `r = max(|x|, |y|)` from 0 to `bound` and, within a radius, pairs in
/// lexicographic order. Independent of the reduction machinery.
///
/// Each radius is covered exactly: instead of evaluating all `8r` boundary
/// pairs, the solutions on each side of the square are found by solving a
/// one-variable quadratic, which gives the same first hit.
pub fn brute_force_search(f: &QuadraticForm, rhs: &BigInt, bound: u64) -> Option<(BigInt, BigInt)> {
    let small = |v: &BigInt| v.to_i128().filter(|x| x.unsigned_abs() < 1 << 31);
    if bound < 1 << 24 {
        if let (Some(a), Some(b), Some(c), Some(t)) = (small(&f.a), small(&f.b), small(&f.c), small(rhs)) {
            return scan(a, b, c, t, bound as i128).map(|(x, y)| (x.into(), y.into()));
        }
    }
    scan(f.a.clone(), f.b.clone(), f.c.clone(), rhs.clone(), BigInt::from(bound))
}

trait ScanInt: Clone + Integer + Signed + Roots + From<i32> {}
impl<T: Clone + Integer + Signed + Roots + From<i32>> ScanInt for T {}

fn scan<T: ScanInt>(a: T, b: T, c: T, rhs: T, bound: T) -> Option<(T, T)> {
    if rhs.is_zero() {
        return Some((T::zero(), T::zero()));
    }
    let mut r = T::one();
    while r <= bound {
        let neg_r = -r.clone();
        // left side x = -r, any y
        if let Some(y) = side_root(&a, &b, &c, &rhs, &neg_r, &neg_r, &r) {
            return Some((neg_r, y));
        }
        // top and bottom y = ±r, |x| < r, solved in x by symmetry of roles
        let inner_lo = neg_r.clone() + T::one();
        let inner_hi = r.clone() - T::one();
        let mut best: Option<(T, T)> = None;
        for y in [neg_r.clone(), r.clone()] {
            if let Some(x) = side_root(&c, &b, &a, &rhs, &y, &inner_lo, &inner_hi) {
                if best.as_ref().is_none_or(|(bx, _)| x < *bx) {
                    best = Some((x, y));
                }
            }
        }
        if best.is_some() {
            return best;
        }
        // right side x = r
        if let Some(y) = side_root(&a, &b, &c, &rhs, &r, &neg_r, &r) {
            return Some((r, y));
        }
        r = r + T::one();
    }
    None
}

/// Smallest `t` in `[lo, hi]` with `p s^2 + q s t + w t^2 = rhs` for fixed
/// `s`.
fn side_root<T: ScanInt>(p: &T, q: &T, w: &T, rhs: &T, s: &T, lo: &T, hi: &T) -> Option<T> {
    if lo > hi {
        return None;
    }
    // w t^2 + (q s) t + (p s^2 - rhs) = 0
    let alpha = w.clone();
    let beta = q.clone() * s.clone();
    let gamma = p.clone() * s.clone() * s.clone() - rhs.clone();
    let in_range = |t: &T| lo <= t && t <= hi;
    if alpha.is_zero() {
        if beta.is_zero() {
            return gamma.is_zero().then(|| lo.clone());
        }
        let (t, rem) = (-gamma).div_rem(&beta);
        return (rem.is_zero() && in_range(&t)).then_some(t);
    }
    let four = T::from(4);
    let delta = beta.clone() * beta.clone() - four * alpha.clone() * gamma;
    if delta.is_negative() {
        return None;
    }
    let root = delta.sqrt();
    if root.clone() * root.clone() != delta {
        return None;
    }
    let two_alpha = T::from(2) * alpha;
    let mut best: Option<T> = None;
    for num in [-beta.clone() - root.clone(), -beta + root] {
        let (t, rem) = num.div_rem(&two_alpha);
        if rem.is_zero() && in_range(&t) && best.as_ref().is_none_or(|bt| t < *bt) {
            best = Some(t);
        }
    }
    best
}
