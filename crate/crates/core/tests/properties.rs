use std::cmp::Ordering;

use morita_core::arith::{is_prime, is_square};
use morita_core::form::brute_force_search;
use morita_core::{
    check_corollary, classify, corner_label, find_lti, kronecker, partition, quasi_basis_ledger, trace_in_range,
    verify_certificate, verify_class, QuadraticForm, QuadraticIrrational, Sign, Theta, TraceValue, Unimodular,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn random_theta(rng: &mut ChaCha8Rng, kmax: i64) -> QuadraticIrrational {
    loop {
        let (k, l, m) = (rng.gen_range(1..=kmax), rng.gen_range(-30..=30), rng.gen_range(-30..=30));
        let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
        if let Ok(x) = QuadraticIrrational::from_i64(k, l, m, sign) {
            return x;
        }
    }
}

#[test]
fn unit_solver_agrees_with_a_scan_reaching_each_witness() {
    for a in -12i64..=12 {
        for bb in -12i64..=12 {
            for c in -12i64..=12 {
                let d = bb * bb - 4 * a * c;
                if d <= 0 || d > 200 || is_square(&b(d)) || a.gcd(&bb).gcd(&c) != 1 {
                    continue;
                }
                let f = QuadraticForm::from_i64(a, bb, c);
                for rhs in [Sign::Plus, Sign::Minus] {
                    let fast = f.represents_unit(rhs).unwrap();
                    let bound = match fast.witness() {
                        Some((x, y)) => {
                            assert_eq!(f.evaluate(x, y), rhs.to_bigint());
                            u64::try_from(x.abs().max(y.abs())).unwrap().max(5000)
                        }
                        None => 5000,
                    };
                    let slow = brute_force_search(&f, &rhs.to_bigint(), bound);
                    assert_eq!(fast.is_solvable(), slow.is_some(), "{f} = {rhs}");
                }
            }
        }
    }
}

#[test]
fn kronecker_agrees_with_root_counting_up_to_200() {
    for p in (3i64..=200).filter(|&p| is_prime(&b(p))) {
        for d in 2i64..=200 {
            if is_square(&b(d)) {
                continue;
            }
            let roots = (0..p).filter(|x| (x * x - d).rem_euclid(p) == 0).count() as i32;
            assert_eq!(kronecker(&b(d), &b(p)), roots - 1, "({d}/{p})");
        }
    }
}

#[test]
fn random_classifications_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let x = random_theta(&mut rng, 60);
        let t = Theta::Quadratic(x.clone());
        let c = classify(&t);
        assert_eq!(c.classes[0].n, b(1));
        for class in &c.classes {
            assert!(verify_class(&t, class), "{x} class {}", class.n);
        }
        // the divisor checks cover every divisor exactly once
        assert!(c.checks.iter().all(|ch| x.minpoly().k().is_multiple_of(&ch.n)));
    }
}

#[test]
fn integer_translation_leaves_labels_unchanged() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let x = random_theta(&mut rng, 30);
        let shifted = x.translate(&b(rng.gen_range(-5..=5)));
        assert_eq!(shifted.minpoly().k(), x.minpoly().k());
        let a = classify(&Theta::Quadratic(x.clone())).labels();
        let b_ = classify(&Theta::Quadratic(shifted)).labels();
        assert_eq!(a, b_, "{x}");
    }
}

#[test]
fn corollary_holds_on_random_prime_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let primes: Vec<i64> = (2..=50).filter(|&p| is_prime(&b(p))).collect();
    let mut done = 0;
    while done < 100 {
        let p = primes[rng.gen_range(0..primes.len())];
        let Ok(x) = QuadraticIrrational::from_i64(p, rng.gen_range(-30..=30), rng.gen_range(-30..=30), Sign::Plus) else {
            continue;
        };
        if x.minpoly().k() != &b(p) {
            continue;
        }
        assert!(check_corollary(&x).unwrap().consistent, "{x}");
        done += 1;
    }
}

#[test]
fn lti_certificates_are_sound_and_feed_the_partition() {
    let mut corpus = vec![];
    for k in 1i64..=40 {
        for (kk, l, m) in [(k, -k, 1), (k, k, -1), (1, k, -1), (k, -3 * k, 1)] {
            if let Ok(x) = QuadraticIrrational::from_i64(kk, l, m, Sign::Plus) {
                corpus.push(x.clone());
                corpus.push(x.conjugate());
            }
        }
    }
    let mut certs_seen = 0;
    for x in corpus {
        let labels = classify(&Theta::Quadratic(x.clone())).labels();
        for cert in find_lti(&x) {
            certs_seen += 1;
            assert!(verify_certificate(&x, &cert));
            assert_eq!(corner_label(&x, &cert).unwrap(), cert.label);
            assert!(labels.contains(&cert.label), "{x}: label {} not a Morita label", cert.label);
            let trace = cert.trace();
            assert!(trace_in_range(&trace, &x));
            let twice = trace.scale(&b(2)) - TraceValue::one();
            let tq = match twice.cmp_zero(&x) {
                Ordering::Greater => trace,
                Ordering::Less => trace.complement(),
                Ordering::Equal => unreachable!("theta is irrational"),
            };
            let plan = partition(&tq, &x).unwrap();
            assert!(plan.n >= 2);
            assert!(plan.parts.iter().all(|p| trace_in_range(p, &x)));
            assert_eq!(quasi_basis_ledger(&plan).unwrap(), b(4));
        }
    }
    assert!(certs_seen > 10);
}

#[test]
fn lti_labels_survive_the_complement_swap() {
    let flip = Unimodular::from_i64(-1, 1, 0, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut corpus: Vec<QuadraticIrrational> = (5..=30)
        .map(|k| QuadraticIrrational::from_i64(k, -k, 1, Sign::Plus).unwrap())
        .collect();
    corpus.extend((0..200).map(|_| random_theta(&mut rng, 30)));
    for x in corpus {
        let certs = find_lti(&x);
        if certs.is_empty() {
            continue;
        }
        let labels = |c: &[morita_core::LtiCertificate]| {
            let mut v: Vec<BigInt> = c.iter().map(|c| c.label.clone()).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(labels(&certs), labels(&find_lti(&x.mobius(&flip))), "{x}");
    }
}

#[test]
fn unreturned_divisors_have_no_small_solutions() {
    for k in 2i64..=12 {
        for l in -6i64..=6 {
            for m in -6i64..=6 {
                let Ok(x) = QuadraticIrrational::from_i64(k, l, m, Sign::Plus) else { continue };
                if x.minpoly().k() != &b(k) {
                    continue;
                }
                let c = classify(&Theta::Quadratic(x.clone()));
                for class in &c.classes {
                    assert!(x.gl2z_equivalent(&x.scale(&class.n)), "{x} label {}", class.n);
                }
                for ch in c.checks.iter().filter(|ch| !c.labels().contains(&ch.n)) {
                    for rhs in [1, -1] {
                        assert_eq!(brute_force_search(&ch.form, &b(rhs), 400), None, "{x} n = {}", ch.n);
                    }
                }
            }
        }
    }
}
