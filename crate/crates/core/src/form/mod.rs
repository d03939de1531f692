//! Indefinite binary quadratic forms `A x^2 + B xy + C y^2`.
//!
//! Reduction and cycles follow the classical rho-operator: every form of
//! positive non-square discriminant reaches a reduced form after finitely many
//! rho steps, and the reduced forms properly equivalent to it are exactly its
//! rho-cycle. A primitive form represents `+1` (resp. `-1`) iff its cycle
//! contains a form with leading coefficient `+1` (resp. `-1`).

mod brute;
mod obstruction;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd3, is_square, isqrt};
use crate::error::{Error, Result};
use crate::quadratic::{Sign, Unimodular};

pub use brute::brute_force_search;
pub use obstruction::{modular_obstruction, ModularObstruction, DEFAULT_OBSTRUCTION_MODULI};

/// Reduction makes O(log |coefficients|) steps; this only guards against a
/// broken invariant turning into an endless loop.
const MAX_REDUCTION_STEPS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QuadraticForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadraticForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        QuadraticForm::new(a.into(), b.into(), c.into())
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// `gcd(A, B, C)`.
    pub fn content(&self) -> BigInt {
        gcd3(&self.a, &self.b, &self.c)
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// The form `(x, y) -> self(g (x, y)^T)`.
    pub fn transform(&self, g: &Unimodular) -> QuadraticForm {
        let [p, q, r, s] = g.entries();
        QuadraticForm {
            a: self.evaluate(p, r),
            b: BigInt::from(2) * &self.a * p * q + &self.b * (p * s + q * r) + BigInt::from(2) * &self.c * r * s,
            c: self.evaluate(q, s),
        }
    }

    fn check_indefinite(&self) -> Result<BigInt> {
        let disc = self.discriminant();
        if !disc.is_positive() {
            return Err(Error::NotIndefinite(disc));
        }
        if is_square(&disc) {
            return Err(Error::SquareDiscriminant(disc));
        }
        Ok(disc)
    }

    /// `0 < B < sqrt(disc)` and `sqrt(disc) - B < 2|A| < sqrt(disc) + B`.
    /// Forms with non-positive or square discriminant are never reduced.
    pub fn is_reduced(&self) -> bool {
        match self.check_indefinite() {
            Ok(disc) => self.is_reduced_with(&isqrt(&disc)),
            Err(_) => false,
        }
    }

    // With s = floor(sqrt(disc)) and disc non-square, for an integer N:
    // N < sqrt(disc) <=> N <= s and N > sqrt(disc) <=> N > s.
    fn is_reduced_with(&self, root: &BigInt) -> bool {
        let two_a = BigInt::from(2) * self.a.abs();
        self.b.is_positive() && &self.b <= root && &two_a + &self.b > *root && &two_a - &self.b <= *root
    }

    /// One rho step: `(A, B, C) -> (C, B', (B'^2 - disc) / 4C)` with
    /// `B' = -B mod 2C` normalized against `C`, and the matrix
    /// `[[0, -1], [1, t]]` realizing it.
    fn rho_with(&self, disc: &BigInt, root: &BigInt) -> (QuadraticForm, Unimodular) {
        let two_c = BigInt::from(2) * self.c.abs();
        let c_abs = self.c.abs();
        let r = if c_abs > *root {
            // -|C| < r <= |C|
            let mut r = (-&self.b).mod_floor(&two_c);
            if r > c_abs {
                r -= &two_c;
            }
            r
        } else {
            // sqrt(disc) - 2|C| < r < sqrt(disc)
            root - (root + &self.b).mod_floor(&two_c)
        };
        let t = (&r + &self.b) / (BigInt::from(2) * &self.c);
        let next = QuadraticForm {
            a: self.c.clone(),
            c: (&r * &r - disc) / (BigInt::from(4) * &self.c),
            b: r,
        };
        let step = Unimodular::new(BigInt::zero(), -BigInt::one(), BigInt::one(), t).expect("det 1");
        (next, step)
    }

    /// Public rho step for forms of positive non-square discriminant.
    pub fn rho(&self) -> Result<(QuadraticForm, Unimodular)> {
        let disc = self.check_indefinite()?;
        Ok(self.rho_with(&disc, &isqrt(&disc)))
    }

    /// Reduces by iterated rho steps. The returned transform `T` satisfies
    /// `self.transform(T) == reduced` and `det T = +1`.
    pub fn reduce(&self) -> Result<Reduction> {
        let disc = self.check_indefinite()?;
        let root = isqrt(&disc);
        let mut form = self.clone();
        let mut transform = Unimodular::identity();
        let mut steps = 0;
        while !form.is_reduced_with(&root) {
            let (next, step) = form.rho_with(&disc, &root);
            assert_eq!(next.discriminant(), disc, "rho changed the discriminant");
            form = next;
            transform = transform.compose(&step);
            steps += 1;
            assert!(steps < MAX_REDUCTION_STEPS, "reduction of {self} did not terminate");
        }
        Ok(Reduction { reduced: form, transform, steps })
    }

    /// The rho-cycle of a reduced form, starting at `self`.
    pub fn cycle(&self) -> Result<Vec<QuadraticForm>> {
        Ok(self.cycle_with_transforms()?.into_iter().map(|(f, _)| f).collect())
    }

    /// Cycle members paired with the accumulated transform from `self`.
    fn cycle_with_transforms(&self) -> Result<Vec<(QuadraticForm, Unimodular)>> {
        let disc = self.check_indefinite()?;
        let root = isqrt(&disc);
        if !self.is_reduced_with(&root) {
            return Err(Error::NotReduced(self.a.clone(), self.b.clone(), self.c.clone()));
        }
        let mut out = vec![(self.clone(), Unimodular::identity())];
        loop {
            let (form, acc) = out.last().unwrap();
            let (next, step) = form.rho_with(&disc, &root);
            assert_eq!(next.discriminant(), disc, "rho changed the discriminant");
            debug_assert!(next.is_reduced_with(&root));
            if next == *self {
                break;
            }
            let acc = acc.compose(&step);
            out.push((next, acc));
            assert!(out.len() < MAX_REDUCTION_STEPS, "cycle of {self} did not close");
        }
        Ok(out)
    }

    /// Decides whether `self(x, y) = rhs` has an integer solution.
    pub fn represents_unit(&self, rhs: Sign) -> Result<RepresentationResult> {
        self.check_indefinite()?;
        let content = self.content();
        if !content.is_one() {
            // content divides every value
            return Ok(RepresentationResult::Unsolvable {
                certificate: UnsolvableCertificate::Modular(ModularObstruction {
                    modulus: content,
                    residues: vec![BigInt::zero()],
                }),
            });
        }
        let reduction = self.reduce()?;
        let target = rhs.to_bigint();
        let cycle = reduction.reduced.cycle_with_transforms()?;
        if let Some((_, acc)) = cycle.iter().find(|(f, _)| f.a == target) {
            // member(1, 0) = rhs and member = self o (T * acc)
            let total = reduction.transform.compose(acc);
            let (x, y) = (total.a().clone(), total.c().clone());
            assert_eq!(self.evaluate(&x, &y), target, "witness failed validation for {self}");
            return Ok(RepresentationResult::Solvable { x, y, rhs });
        }
        let certificate = match modular_obstruction(self, &target, DEFAULT_OBSTRUCTION_MODULI) {
            Some(obstruction) => UnsolvableCertificate::Modular(obstruction),
            None => UnsolvableCertificate::Cycle(CycleCertificate {
                reduced_cycle: cycle.into_iter().map(|(f, _)| f).collect(),
            }),
        };
        Ok(RepresentationResult::Unsolvable { certificate })
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: QuadraticForm,
    pub transform: Unimodular,
    pub steps: usize,
}

/// The full reduced cycle of a form, none of whose members has leading
/// coefficient equal to the requested unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCertificate {
    pub reduced_cycle: Vec<QuadraticForm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnsolvableCertificate {
    Modular(ModularObstruction),
    Cycle(CycleCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationResult {
    Solvable { x: BigInt, y: BigInt, rhs: Sign },
    Unsolvable { certificate: UnsolvableCertificate },
}

impl RepresentationResult {
    pub fn is_solvable(&self) -> bool {
        matches!(self, RepresentationResult::Solvable { .. })
    }

    pub fn witness(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            RepresentationResult::Solvable { x, y, .. } => Some((x, y)),
            RepresentationResult::Unsolvable { .. } => None,
        }
    }
}
