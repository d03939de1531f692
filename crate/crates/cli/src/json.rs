//! JSON encodings of core types. Integers are decimal strings.

use morita_core::form::{CycleCertificate, ModularObstruction, UnsolvableCertificate};
use morita_core::loctriv::LtiCertificate;
use morita_core::{
    Error, PartitionPlan, QuadraticForm, QuadraticIrrational, RepresentationResult, SubalgebraClass, Theta,
    TraceValue, Unimodular,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn ints<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(v.into_iter().map(int).collect())
}

pub fn quadratic(x: &QuadraticIrrational) -> Value {
    let (k, l, m) = x.minpoly().coefficients();
    json!({
        "spec": x.to_string(),
        "surd": x.to_surd_spec(),
        "minimal_polynomial": { "k": int(k), "l": int(l), "m": int(m) },
        "branch": x.branch().symbol().to_string(),
        "discriminant": int(&x.discriminant()),
    })
}

pub fn theta(t: &Theta) -> Value {
    match t {
        Theta::Quadratic(x) => quadratic(x),
        Theta::NonQuadratic => json!({ "spec": "nonquadratic" }),
    }
}

pub fn form(f: &QuadraticForm) -> Value {
    json!({ "a": int(&f.a), "b": int(&f.b), "c": int(&f.c) })
}

pub fn matrix(g: &Unimodular) -> Value {
    json!([[int(g.a()), int(g.b())], [int(g.c()), int(g.d())]])
}

pub fn obstruction(ob: &ModularObstruction) -> Value {
    json!({ "kind": "modular", "modulus": int(&ob.modulus), "residues": ints(&ob.residues) })
}

fn cycle(c: &CycleCertificate) -> Value {
    json!({ "kind": "cycle", "reduced_cycle": c.reduced_cycle.iter().map(form).collect::<Vec<_>>() })
}

pub fn representation(r: &RepresentationResult) -> Value {
    match r {
        RepresentationResult::Solvable { x, y, rhs } => {
            json!({ "solvable": true, "rhs": int(&rhs.to_bigint()), "x": int(x), "y": int(y) })
        }
        RepresentationResult::Unsolvable { certificate } => {
            let cert = match certificate {
                UnsolvableCertificate::Modular(ob) => obstruction(ob),
                UnsolvableCertificate::Cycle(c) => cycle(c),
            };
            json!({ "solvable": false, "certificate": cert })
        }
    }
}

pub fn class(c: &SubalgebraClass, verified: bool) -> Value {
    let solution = match &c.solution {
        Some(s) => json!({ "alpha": int(&s.alpha), "d": int(&s.d), "t": int(&s.t) }),
        None => Value::Null,
    };
    json!({
        "n": int(&c.n),
        "rhs": int(&c.rhs.to_bigint()),
        "witness": matrix(&c.witness),
        "solution": solution,
        "verified": verified,
    })
}

pub fn trace(t: &TraceValue) -> Value {
    json!({ "u": int(&t.u), "v": int(&t.v) })
}

pub fn certificate(c: &LtiCertificate, corner: Option<&BigInt>) -> Value {
    json!({
        "variant": c.variant.to_string(),
        "K": int(&c.k),
        "c": int(&c.c),
        "d": int(&c.d),
        "s": int(&c.s),
        "root_branch": c.root_branch.symbol().to_string(),
        "trace": trace(&c.trace()),
        "label": int(&c.label),
        "corner_label": corner.map(int).unwrap_or(Value::Null),
    })
}

pub fn plan(p: &PartitionPlan) -> Value {
    json!({
        "n": p.n,
        "parts": p.parts.iter().map(trace).collect::<Vec<_>>(),
        "complement": trace(&p.complement),
        "quasi_basis_size": p.quasi_basis_size,
    })
}

/// Stable machine-readable name of an error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DegenerateInput(_) => "degenerate_input",
        Error::NotUnimodular { .. } => "not_unimodular",
        Error::NotIndefinite(_) => "not_indefinite",
        Error::SquareDiscriminant(_) => "square_discriminant",
        Error::NotReduced(..) => "not_reduced",
        Error::NotASolution { .. } => "not_a_solution",
        Error::NotPrime(_) => "not_prime",
        Error::LeadingCoefficientNotPrime(_) => "leading_coefficient_not_prime",
        Error::InvalidCertificate(_) => "invalid_certificate",
        Error::TraceOutOfRange { .. } => "trace_out_of_range",
        Error::InvalidPlan(_) => "invalid_plan",
        Error::Parse(_) => "parse",
    }
}
