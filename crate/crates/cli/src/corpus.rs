//! Built-in worked examples, each checked exactly.

use morita_core::form::UnsolvableCertificate;
use morita_core::{
    check_corollary, classify, corner_label, find_lti, minimal_index, partition, quasi_basis_ledger, splitting,
    verify_class, InclusionKind, QuadraticForm, QuadraticIrrational, RepresentationResult, Sign, SplittingType, Theta,
    TraceValue,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::EXIT_DOMAIN;
use crate::EXIT_OK;

type Check = fn() -> Result<String, String>;

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| b(x)).collect()
}

fn q(k: i64, l: i64, m: i64) -> QuadraticIrrational {
    QuadraticIrrational::from_i64(k, l, m, Sign::Plus).expect("corpus parameters are valid")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn labels(x: &QuadraticIrrational) -> Vec<BigInt> {
    classify(&Theta::Quadratic(x.clone())).labels()
}

fn expect_labels(x: QuadraticIrrational, want: &[i64]) -> Result<String, String> {
    let t = Theta::Quadratic(x.clone());
    let c = classify(&t);
    ensure(c.labels() == ints(want), format!("labels {:?}", c.labels()))?;
    for class in &c.classes {
        ensure(verify_class(&t, class), format!("class {} does not verify", class.n))?;
    }
    Ok(format!("{x}: labels {want:?}"))
}

fn lti_labels(x: &QuadraticIrrational) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = find_lti(x).into_iter().map(|c| c.label).collect();
    v.sort();
    v.dedup();
    v
}

const EXAMPLES: &[(&str, &str, Check)] = &[
    ("classify-1-l-m", "leading coefficient 1 only has the trivial class", || {
        for (l, m) in [(0, -2), (0, -3), (1, -1), (1, -3), (2, -7), (3, -1)] {
            expect_labels(q(1, l, m), &[1])?;
        }
        Ok("six parameters with k = 1 give {1}".into())
    }),
    ("classify-5-5-minus2", "(5,5,-2) is trivial; its unit form is obstructed mod 5", || {
        expect_labels(q(5, 5, -2), &[1])?;
        let f = QuadraticForm::from_i64(5, -5, -2);
        for rhs in [Sign::Plus, Sign::Minus] {
            match f.represents_unit(rhs).map_err(|e| e.to_string())? {
                RepresentationResult::Unsolvable { certificate: UnsolvableCertificate::Modular(ob) }
                    if ob.modulus == b(5) && ob.residues == ints(&[0, 2, 3]) => {}
                other => return Err(format!("rhs {rhs}: {other:?}")),
            }
        }
        Ok("labels [1]; residues mod 5 are {0, 2, 3}".into())
    }),
    ("classify-5-minus5-1", "(5,-5,1) has labels {1, 5}", || expect_labels(q(5, -5, 1), &[1, 5])),
    ("classify-6-minus6-1", "(6,-6,1) has labels {1, 2, 3, 6}", || expect_labels(q(6, -6, 1), &[1, 2, 3, 6])),
    ("classify-nonquadratic", "non-quadratic parameters only have the trivial class", || {
        let c = classify(&Theta::NonQuadratic);
        ensure(c.labels() == ints(&[1]), format!("labels {:?}", c.labels()))?;
        Ok("labels [1]".into())
    }),
    ("classify-p-0-minus1", "(p,0,-1) has labels {1, p}", || {
        for p in [2, 3, 5, 7, 11, 13] {
            expect_labels(q(p, 0, -1), &[1, p])?;
        }
        Ok("p in {2, 3, 5, 7, 11, 13}".into())
    }),
    ("corollary-5-5-minus2", "ramified prime with trivial classification", || {
        let r = check_corollary(&q(5, 5, -2)).map_err(|e| e.to_string())?;
        ensure(r.splitting.kind == SplittingType::Ramified && !r.nontrivial && r.consistent, format!("{r:?}"))?;
        Ok("5 ramified in Q(sqrt 65), labels [1]".into())
    }),
    ("corollary-5-minus5-1", "nontrivial classification forces a non-inert prime", || {
        let r = check_corollary(&q(5, -5, 1)).map_err(|e| e.to_string())?;
        ensure(r.splitting.kind == SplittingType::Ramified && r.nontrivial && r.consistent, format!("{r:?}"))?;
        let split = splitting(&b(11), &b(5)).map_err(|e| e.to_string())?.kind;
        let inert = splitting(&b(7), &b(5)).map_err(|e| e.to_string())?.kind;
        ensure(split == SplittingType::Split && inert == SplittingType::Inert, "11 / 7 in Q(sqrt 5)")?;
        Ok("5 ramified, 11 split, 7 inert in Q(sqrt 5)".into())
    }),
    ("index-5-minus5-1", "partition of tau(q) = theta for theta = (5 + sqrt 5)/10", || {
        let x = q(5, -5, 1);
        let plan = partition(&TraceValue::from_i64(0, 1), &x).map_err(|e| e.to_string())?;
        ensure(plan.n == 3 && plan.parts[2] == TraceValue::from_i64(-2, 3), format!("{plan:?}"))?;
        ensure(plan.quasi_basis_size == 6, "quasi-basis size")?;
        let ledger = quasi_basis_ledger(&plan).map_err(|e| e.to_string())?;
        ensure(ledger == b(4), format!("ledger {ledger}"))?;
        let lti = minimal_index(&InclusionKind::LocallyTrivial);
        ensure(lti.to_string() == "4", format!("minimal index {lti}"))?;
        let power = minimal_index(&InclusionKind::PowerSubalgebra(b(3)));
        ensure(power.to_string() == "3", format!("power index {power}"))?;
        Ok("n = 3, last part 3 theta - 2, index 4".into())
    }),
    ("loctriv-1-0-minus3", "sqrt 3 has no locally trivial inclusion", || {
        ensure(find_lti(&q(1, 0, -3)).is_empty(), "found a certificate")?;
        Ok("empty".into())
    }),
    ("loctriv-1-minus1-minus1", "discriminant five with k = 1", || {
        let x = q(1, -1, -1);
        let found = find_lti(&x)
            .into_iter()
            .any(|c| c.k == b(1) && c.c == b(-1) && c.d == b(2) && c.s == b(-1));
        ensure(found, "missing S2 certificate K = 1, c = -1, d = 2")?;
        Ok("S2 with K = 1, c = -1, d = 2".into())
    }),
    ("loctriv-5-minus5-1", "(5,-5,1) has locally trivial inclusions with labels 1 and 5", || {
        let x = q(5, -5, 1);
        ensure(lti_labels(&x) == ints(&[1, 5]), format!("labels {:?}", lti_labels(&x)))?;
        for cert in find_lti(&x) {
            let label = corner_label(&x, &cert).map_err(|e| e.to_string())?;
            ensure(label == cert.label, "corner label")?;
        }
        ensure(labels(&x) == ints(&[1, 5]), "Morita labels")?;
        Ok("labels [1, 5]".into())
    }),
    ("loctriv-6-minus6-1", "(6,-6,1) has a locally trivial inclusion with label 6", || {
        let x = q(6, -6, 1);
        ensure(lti_labels(&x) == ints(&[6]), format!("labels {:?}", lti_labels(&x)))?;
        Ok("labels [6]".into())
    }),
];

pub fn run() -> (Value, String, i32) {
    let mut ids: Vec<usize> = (0..EXAMPLES.len()).collect();
    ids.sort_by_key(|&i| EXAMPLES[i].0);
    let mut results = Vec::new();
    let mut summary = String::new();
    let mut failed = 0;
    for i in ids {
        let (id, description, check) = EXAMPLES[i];
        let (passed, detail) = match check() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if !passed {
            failed += 1;
        }
        summary.push_str(&format!("{} {id}: {detail}\n", if passed { "pass" } else { "FAIL" }));
        results.push(json!({ "id": id, "description": description, "passed": passed, "detail": detail }));
    }
    let doc = json!({
        "examples": results,
        "passed": EXAMPLES.len() - failed,
        "failed": failed,
    });
    (doc, summary, if failed == 0 { EXIT_OK } else { EXIT_DOMAIN })
}
