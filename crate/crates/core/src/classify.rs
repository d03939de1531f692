//! Isomorphism classes of unital subalgebras of `A_theta` that are Morita
//! equivalent to `A_theta`.
//!
//! For `theta` with minimal polynomial `(k, l, m)` every such subalgebra is
//! `A_{n theta}` for a divisor `n` of `k`, and `A_{n theta}` occurs exactly
//! when `n x^2 - l xy + (k/n) m y^2 = ±1` is solvable. A solution `(d, t)`
//! yields `g = [[nd - lt, -mt], [(k/n) t, d]]` in GL(2,Z) with
//! `g theta = n theta`. Non-quadratic parameters only have the trivial class.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{divides, divisors};
use crate::error::{Error, Result};
use crate::form::{QuadraticForm, RepresentationResult};
use crate::quadratic::{MinimalPolynomial, Sign, Theta, Unimodular};

/// `(d, t)` solving the unit equation for label `n`, with `alpha = k / n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSolution {
    pub alpha: BigInt,
    pub d: BigInt,
    pub t: BigInt,
}

/// One class `A_{n theta}` with its GL(2,Z) witness. `solution` is `None`
/// only for the trivial class of a non-quadratic parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraClass {
    pub n: BigInt,
    pub rhs: Sign,
    pub witness: Unimodular,
    pub solution: Option<FormSolution>,
}

/// Solvability of both unit equations for one divisor of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorCheck {
    pub n: BigInt,
    pub alpha: BigInt,
    pub form: QuadraticForm,
    pub plus: RepresentationResult,
    pub minus: RepresentationResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaClassification {
    pub theta: Theta,
    /// Sorted by label.
    pub classes: Vec<SubalgebraClass>,
    /// Empty for a non-quadratic parameter.
    pub checks: Vec<DivisorCheck>,
    pub complete: bool,
}

impl MoritaClassification {
    pub fn labels(&self) -> Vec<BigInt> {
        self.classes.iter().map(|c| c.n.clone()).collect()
    }
}

/// `(n, -l, (k/n) m)` for a divisor `n` of `k`.
pub fn unit_form(poly: &MinimalPolynomial, n: &BigInt) -> QuadraticForm {
    let (k, l, m) = poly.coefficients();
    assert!(divides(n, k), "{n} does not divide {k}");
    QuadraticForm::new(n.clone(), -l, k / n * m)
}

pub fn classify(theta: &Theta) -> MoritaClassification {
    let x = match theta {
        Theta::NonQuadratic => {
            return MoritaClassification {
                theta: Theta::NonQuadratic,
                classes: vec![SubalgebraClass {
                    n: BigInt::one(),
                    rhs: Sign::Plus,
                    witness: Unimodular::identity(),
                    solution: None,
                }],
                checks: Vec::new(),
                complete: true,
            }
        }
        Theta::Quadratic(x) => x,
    };
    let poly = x.minpoly();
    let mut classes = Vec::new();
    let mut checks = Vec::new();
    for n in divisors(poly.k()) {
        let form = unit_form(poly, &n);
        let plus = form.represents_unit(Sign::Plus).expect("unit forms share the discriminant of theta");
        let minus = form.represents_unit(Sign::Minus).expect("unit forms share the discriminant of theta");
        let chosen = if n.is_one() {
            // (1, 0) solves the trivial label's equation and gives the identity
            Some((BigInt::one(), BigInt::zero(), Sign::Plus))
        } else {
            [(&plus, Sign::Plus), (&minus, Sign::Minus)]
                .into_iter()
                .find_map(|(res, rhs)| res.witness().map(|(d, t)| (d.clone(), t.clone(), rhs)))
        };
        if let Some((d, t, rhs)) = chosen {
            let witness = witness_matrix(&n, &d, &t, poly).expect("validated solution");
            let class = SubalgebraClass {
                n: n.clone(),
                rhs,
                witness,
                solution: Some(FormSolution { alpha: poly.k() / &n, d, t }),
            };
            assert!(verify_class(theta, &class), "class {n} failed verification");
            classes.push(class);
        }
        let alpha = poly.k() / &n;
        checks.push(DivisorCheck { n, alpha, form, plus, minus });
    }
    MoritaClassification { theta: theta.clone(), classes, checks, complete: true }
}

/// `[[nd - lt, -mt], [alpha t, d]]` for a solution `(d, t)` of the unit
/// equation of label `n`.
pub fn witness_matrix(n: &BigInt, d: &BigInt, t: &BigInt, poly: &MinimalPolynomial) -> Result<Unimodular> {
    let (k, l, m) = poly.coefficients();
    let not_a_solution = || Error::NotASolution { n: n.clone(), d: d.clone(), t: t.clone() };
    if !divides(n, k) || n <= &BigInt::zero() {
        return Err(not_a_solution());
    }
    let alpha = k / n;
    Unimodular::new(n * d - l * t, -(m * t), alpha * t, d.clone()).map_err(|_| not_a_solution())
}

/// Re-checks every invariant of a class exactly.
pub fn verify_class(theta: &Theta, class: &SubalgebraClass) -> bool {
    if class.witness.det() != class.rhs {
        return false;
    }
    let x = match theta {
        Theta::NonQuadratic => {
            return class.n.is_one()
                && class.solution.is_none()
                && (class.witness == Unimodular::identity());
        }
        Theta::Quadratic(x) => x,
    };
    let poly = x.minpoly();
    let Some(sol) = &class.solution else { return false };
    if class.n <= BigInt::zero() || !divides(&class.n, poly.k()) || &sol.alpha * &class.n != *poly.k() {
        return false;
    }
    if unit_form(poly, &class.n).evaluate(&sol.d, &sol.t) != class.rhs.to_bigint() {
        return false;
    }
    x.mobius(&class.witness) == x.scale(&class.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::QuadraticIrrational;

    fn theta(k: i64, l: i64, m: i64) -> Theta {
        Theta::Quadratic(QuadraticIrrational::from_i64(k, l, m, Sign::Plus).unwrap())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn poly(k: i64, l: i64, m: i64) -> MinimalPolynomial {
        MinimalPolynomial::new(k.into(), l.into(), m.into()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let five = classify(&theta(5, -5, 1));
        assert_eq!(five.labels(), ints(&[1, 5]));
        assert_eq!(five.classes[0].witness, Unimodular::identity());
        assert_eq!(classify(&theta(6, -6, 1)).labels(), ints(&[1, 2, 3, 6]));
        assert_eq!(classify(&theta(5, 5, -2)).labels(), ints(&[1]));
        assert_eq!(classify(&theta(1, -1, -1)).labels(), ints(&[1]));
        for p in [2, 3, 5, 7, 11, 13] {
            assert_eq!(classify(&theta(p, 0, -1)).labels(), ints(&[1, p]));
        }
        let nq = classify(&Theta::NonQuadratic);
        assert_eq!(nq.labels(), ints(&[1]));
        assert!(nq.complete);
    }

    #[test]
    fn plus_witness_preferred() {
        // (6,6,1) represents +1 at (0,1)
        let c = classify(&theta(6, -6, 1));
        let six = c.classes.iter().find(|c| c.n == BigInt::from(6)).unwrap();
        assert_eq!(six.rhs, Sign::Plus);
        // (3,6,2) only represents -1
        let three = c.classes.iter().find(|c| c.n == BigInt::from(3)).unwrap();
        assert_eq!(three.rhs, Sign::Minus);
    }

    #[test]
    fn witness_examples() {
        let g = witness_matrix(&5.into(), &1.into(), &(-1).into(), &poly(5, -5, 1)).unwrap();
        assert_eq!(g, Unimodular::from_i64(0, 1, -1, 1).unwrap());
        assert_eq!(g.det(), Sign::Plus);
        let g = witness_matrix(&1.into(), &1.into(), &0.into(), &poly(7, 3, -11)).unwrap();
        assert_eq!(g, Unimodular::identity());
        let g = witness_matrix(&6.into(), &0.into(), &1.into(), &poly(6, -6, 1)).unwrap();
        assert_eq!(g, Unimodular::from_i64(6, -1, 1, 0).unwrap());
        let x = QuadraticIrrational::from_i64(6, -6, 1, Sign::Minus).unwrap();
        assert_eq!(x.mobius(&g), x.scale(&6.into()));
        assert!(matches!(
            witness_matrix(&5.into(), &1.into(), &1.into(), &poly(5, -5, 1)),
            Err(Error::NotASolution { .. })
        ));
    }

    #[test]
    fn verify_class_examples() {
        let t = theta(5, -5, 1);
        let c = classify(&t);
        let five = c.classes.iter().find(|c| c.n == BigInt::from(5)).unwrap().clone();
        assert!(verify_class(&t, &five));

        let mut tampered = five.clone();
        tampered.witness = Unimodular::identity();
        assert!(!verify_class(&t, &tampered));

        let mut zero = five.clone();
        if let Some(s) = zero.solution.as_mut() {
            s.d = BigInt::zero();
            s.t = BigInt::zero();
        }
        assert!(!verify_class(&t, &zero));

        let mut wrong_label = five;
        wrong_label.n = BigInt::from(2);
        assert!(!verify_class(&t, &wrong_label));
    }

    #[test]
    fn both_branches_classify_alike() {
        for (k, l, m) in [(5, -5, 1), (6, -6, 1), (5, 5, -2), (12, 7, -3), (10, 0, -1)] {
            let plus = QuadraticIrrational::from_i64(k, l, m, Sign::Plus).unwrap();
            let a = classify(&Theta::Quadratic(plus.clone())).labels();
            let b = classify(&Theta::Quadratic(plus.conjugate())).labels();
            assert_eq!(a, b);
        }
    }
}
