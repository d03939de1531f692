//! Python bindings. Integers cross the boundary as Python `int`, so nothing
//! is ever rounded.

use morita_core::form::UnsolvableCertificate;
use morita_core::{self as core, InclusionKind, QuadraticIrrational, RepresentationResult, Sign, TraceValue};
use num_bigint::BigInt;
use num_traits::Signed;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(_morita, MoritaError, PyValueError);

fn err(e: core::Error) -> PyErr {
    MoritaError::new_err(e.to_string())
}

fn sign(rhs: i64) -> PyResult<Sign> {
    match rhs {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        _ => Err(PyValueError::new_err(format!("rhs must be 1 or -1, got {rhs}"))),
    }
}

fn branch(s: &str) -> PyResult<Sign> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        _ => Err(PyValueError::new_err(format!("branch must be '+' or '-', got {s:?}"))),
    }
}

type Matrix = ((BigInt, BigInt), (BigInt, BigInt));

fn matrix(g: &core::Unimodular) -> Matrix {
    ((g.a().clone(), g.b().clone()), (g.c().clone(), g.d().clone()))
}

fn pair(t: &TraceValue) -> (BigInt, BigInt) {
    (t.u.clone(), t.v.clone())
}

/// A real quadratic irrational, or the non-quadratic marker.
#[pyclass(frozen, eq, skip_from_py_object, module = "morita")]
#[derive(Clone, PartialEq)]
struct Theta(core::Theta);

impl Theta {
    fn quadratic(&self) -> PyResult<&QuadraticIrrational> {
        match &self.0 {
            core::Theta::Quadratic(x) => Ok(x),
            core::Theta::NonQuadratic => Err(MoritaError::new_err("operation needs a quadratic theta")),
        }
    }
}

#[pymethods]
impl Theta {
    /// Parses `poly:k,l,m,+|-`, `surd:(p+q*sqrt(N))/r` or `nonquadratic`.
    #[staticmethod]
    fn parse(spec: &str) -> PyResult<Self> {
        spec.parse().map(Theta).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (k, l, m, branch = "+"))]
    fn from_poly(k: BigInt, l: BigInt, m: BigInt, branch: &str) -> PyResult<Self> {
        let b = self::branch(branch)?;
        QuadraticIrrational::normalize(k, l, m, b).map(|x| Theta(core::Theta::Quadratic(x))).map_err(err)
    }

    #[staticmethod]
    fn nonquadratic() -> Self {
        Theta(core::Theta::NonQuadratic)
    }

    #[getter]
    fn is_quadratic(&self) -> bool {
        matches!(self.0, core::Theta::Quadratic(_))
    }

    /// `(k, l, m)` with `k > 0` and `gcd = 1`.
    #[getter]
    fn minimal_polynomial(&self) -> PyResult<(BigInt, BigInt, BigInt)> {
        let (k, l, m) = self.quadratic()?.minpoly().coefficients();
        Ok((k.clone(), l.clone(), m.clone()))
    }

    #[getter]
    fn branch(&self) -> PyResult<String> {
        Ok(self.quadratic()?.branch().symbol().to_string())
    }

    #[getter]
    fn discriminant(&self) -> PyResult<BigInt> {
        Ok(self.quadratic()?.discriminant())
    }

    #[getter]
    fn surd(&self) -> PyResult<String> {
        Ok(self.quadratic()?.to_surd_spec())
    }

    fn conjugate(&self) -> PyResult<Self> {
        Ok(Theta(core::Theta::Quadratic(self.quadratic()?.conjugate())))
    }

    fn scale(&self, n: BigInt) -> PyResult<Self> {
        Ok(Theta(core::Theta::Quadratic(self.quadratic()?.scale(&n))))
    }

    fn translate(&self, t: BigInt) -> PyResult<Self> {
        Ok(Theta(core::Theta::Quadratic(self.quadratic()?.translate(&t))))
    }

    /// Möbius action of `[[a, b], [c, d]]` in GL(2,Z).
    fn mobius(&self, g: Matrix) -> PyResult<Self> {
        let ((a, b), (c, d)) = g;
        let g = core::Unimodular::new(a, b, c, d).map_err(err)?;
        Ok(Theta(core::Theta::Quadratic(self.quadratic()?.mobius(&g))))
    }

    fn floor(&self) -> PyResult<BigInt> {
        Ok(self.quadratic()?.floor())
    }

    /// `(preperiod, period)` of the continued fraction.
    fn continued_fraction(&self) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
        let cf = self.quadratic()?.continued_fraction();
        Ok((cf.preperiod, cf.period))
    }

    fn gl2z_equivalent(&self, other: &Theta) -> PyResult<bool> {
        Ok(self.quadratic()?.gl2z_equivalent(other.quadratic()?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Theta.parse({:?})", self.0.to_string())
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }
}

/// Outcome of `f(x, y) = rhs`. When unsolvable, `certificate` is `"modular"`
/// (with `modulus` and `residues`) or `"cycle"` (with `reduced_cycle`).
#[pyclass(frozen, get_all, module = "morita")]
struct Representation {
    solvable: bool,
    rhs: i64,
    x: Option<BigInt>,
    y: Option<BigInt>,
    certificate: Option<String>,
    modulus: Option<BigInt>,
    residues: Option<Vec<BigInt>>,
    reduced_cycle: Option<Vec<(BigInt, BigInt, BigInt)>>,
}

impl Representation {
    fn new(r: &RepresentationResult, rhs: Sign) -> Self {
        let mut out = Representation {
            solvable: r.is_solvable(),
            rhs: rhs.to_i32().into(),
            x: None,
            y: None,
            certificate: None,
            modulus: None,
            residues: None,
            reduced_cycle: None,
        };
        match r {
            RepresentationResult::Solvable { x, y, .. } => {
                out.x = Some(x.clone());
                out.y = Some(y.clone());
            }
            RepresentationResult::Unsolvable { certificate: UnsolvableCertificate::Modular(ob) } => {
                out.certificate = Some("modular".into());
                out.modulus = Some(ob.modulus.clone());
                out.residues = Some(ob.residues.clone());
            }
            RepresentationResult::Unsolvable { certificate: UnsolvableCertificate::Cycle(c) } => {
                out.certificate = Some("cycle".into());
                out.reduced_cycle = Some(c.reduced_cycle.iter().map(|f| (f.a.clone(), f.b.clone(), f.c.clone())).collect());
            }
        }
        out
    }
}

#[pymethods]
impl Representation {
    fn __repr__(&self) -> String {
        match (&self.x, &self.y, &self.certificate) {
            (Some(x), Some(y), _) => format!("Representation(rhs={}, x={x}, y={y})", self.rhs),
            (_, _, cert) => format!("Representation(rhs={}, unsolvable, certificate={cert:?})", self.rhs),
        }
    }
}

/// The binary form `a x^2 + b xy + c y^2`.
#[pyclass(frozen, eq, skip_from_py_object, module = "morita")]
#[derive(Clone, PartialEq)]
struct QuadraticForm(core::QuadraticForm);

#[pymethods]
impl QuadraticForm {
    #[new]
    fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QuadraticForm(core::QuadraticForm::new(a, b, c))
    }

    #[getter]
    fn coefficients(&self) -> (BigInt, BigInt, BigInt) {
        (self.0.a.clone(), self.0.b.clone(), self.0.c.clone())
    }

    #[getter]
    fn discriminant(&self) -> BigInt {
        self.0.discriminant()
    }

    fn evaluate(&self, x: BigInt, y: BigInt) -> BigInt {
        self.0.evaluate(&x, &y)
    }

    fn is_reduced(&self) -> bool {
        self.0.is_reduced()
    }

    /// The reduced cycle of an indefinite form with non-square discriminant.
    fn cycle(&self) -> PyResult<Vec<QuadraticForm>> {
        Ok(self.0.cycle().map_err(err)?.into_iter().map(QuadraticForm).collect())
    }

    /// Decides `f(x, y) = rhs` for `rhs` in `{1, -1}`.
    fn represents_unit(&self, rhs: i64) -> PyResult<Representation> {
        let s = sign(rhs)?;
        let r = self.0.represents_unit(s).map_err(err)?;
        Ok(Representation::new(&r, s))
    }

    fn __repr__(&self) -> String {
        format!("QuadraticForm({}, {}, {})", self.0.a, self.0.b, self.0.c)
    }
}

/// `A_{n theta}` with witness `g` satisfying `g theta = n theta`.
#[pyclass(frozen, get_all, module = "morita")]
struct SubalgebraClass {
    n: BigInt,
    rhs: i64,
    witness: Matrix,
    /// `(alpha, d, t)`; `None` for a non-quadratic parameter.
    solution: Option<(BigInt, BigInt, BigInt)>,
}

#[pymethods]
impl SubalgebraClass {
    fn __repr__(&self) -> String {
        let ((a, b), (c, d)) = &self.witness;
        format!("SubalgebraClass(n={}, rhs={}, witness=[[{a}, {b}], [{c}, {d}]])", self.n, self.rhs)
    }
}

#[pyclass(frozen, get_all, module = "morita")]
struct Classification {
    theta: Theta,
    labels: Vec<BigInt>,
    classes: Vec<Py<SubalgebraClass>>,
    complete: bool,
}

#[pymethods]
impl Classification {
    fn __repr__(&self) -> String {
        let labels: Vec<String> = self.labels.iter().map(|n| n.to_string()).collect();
        format!("Classification({}, labels=[{}])", self.theta.0, labels.join(", "))
    }
}

/// Every unital subalgebra of `A_theta` Morita equivalent to it, up to
/// isomorphism, each with a verified GL(2,Z) witness.
#[pyfunction]
fn classify(py: Python<'_>, theta: &Theta) -> PyResult<Classification> {
    let c = core::classify(&theta.0);
    let classes = c
        .classes
        .iter()
        .map(|cl| {
            let class = SubalgebraClass {
                n: cl.n.clone(),
                rhs: cl.rhs.to_i32().into(),
                witness: matrix(&cl.witness),
                solution: cl.solution.as_ref().map(|s| (s.alpha.clone(), s.d.clone(), s.t.clone())),
            };
            Py::new(py, class)
        })
        .collect::<PyResult<_>>()?;
    Ok(Classification { theta: theta.clone(), labels: c.labels(), classes, complete: c.complete })
}

#[pyclass(frozen, skip_from_py_object, module = "morita")]
#[derive(Clone)]
struct LtiCertificate(core::LtiCertificate);

#[pymethods]
impl LtiCertificate {
    #[getter]
    fn variant(&self) -> String {
        self.0.variant.to_string()
    }

    #[getter(K)]
    fn big_k(&self) -> BigInt {
        self.0.k.clone()
    }

    #[getter]
    fn c(&self) -> BigInt {
        self.0.c.clone()
    }

    #[getter]
    fn d(&self) -> BigInt {
        self.0.d.clone()
    }

    #[getter]
    fn s(&self) -> BigInt {
        self.0.s.clone()
    }

    #[getter]
    fn root_branch(&self) -> String {
        self.0.root_branch.symbol().to_string()
    }

    #[getter]
    fn label(&self) -> BigInt {
        self.0.label.clone()
    }

    /// `(u, v)` with trace `u + v theta`.
    #[getter]
    fn trace(&self) -> (BigInt, BigInt) {
        pair(&self.0.trace())
    }

    fn __repr__(&self) -> String {
        let c = &self.0;
        format!("LtiCertificate({}, K={}, c={}, d={}, label={})", c.variant, c.k, c.c, c.d, c.label)
    }
}

/// Certificates of locally trivial inclusions, sorted by `(variant, K, c, d)`.
#[pyfunction]
fn find_lti(theta: &Theta) -> PyResult<Vec<LtiCertificate>> {
    Ok(core::find_lti(theta.quadratic()?).into_iter().map(LtiCertificate).collect())
}

#[pyfunction]
fn verify_certificate(theta: &Theta, cert: &LtiCertificate) -> PyResult<bool> {
    Ok(core::verify_certificate(theta.quadratic()?, &cert.0))
}

/// Recomputes the label of a certificate from the corner algebra.
#[pyfunction]
fn corner_label(theta: &Theta, cert: &LtiCertificate) -> PyResult<BigInt> {
    core::corner_label(theta.quadratic()?, &cert.0).map_err(err)
}

#[pyfunction]
fn kronecker(a: BigInt, n: BigInt) -> i32 {
    core::kronecker(&a, &n)
}

#[pyfunction]
fn fundamental_discriminant(d: BigInt) -> PyResult<BigInt> {
    core::fundamental_discriminant(&d).map_err(err)
}

/// `(type, fundamental_discriminant, kronecker)` for a prime `p` in
/// `Q(sqrt d)`; `type` is `"split"`, `"ramified"` or `"inert"`.
#[pyfunction]
fn splitting(p: BigInt, d: BigInt) -> PyResult<(String, BigInt, i32)> {
    let s = core::splitting(&p, &d).map_err(err)?;
    Ok((s.kind.to_string(), s.fundamental_discriminant, s.kronecker))
}

/// `(labels, splitting type, nontrivial, consistent)` for a theta whose
/// leading coefficient is prime.
#[pyfunction]
fn check_corollary(theta: &Theta) -> PyResult<(Vec<BigInt>, String, bool, bool)> {
    let r = core::check_corollary(theta.quadratic()?).map_err(err)?;
    Ok((r.labels, r.splitting.kind.to_string(), r.nontrivial, r.consistent))
}

#[pyclass(frozen, module = "morita")]
struct PartitionPlan(core::PartitionPlan);

#[pymethods]
impl PartitionPlan {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn trace(&self) -> (BigInt, BigInt) {
        pair(&self.0.trace_q)
    }

    #[getter]
    fn parts(&self) -> Vec<(BigInt, BigInt)> {
        self.0.parts.iter().map(pair).collect()
    }

    #[getter]
    fn complement(&self) -> (BigInt, BigInt) {
        pair(&self.0.complement)
    }

    #[getter]
    fn quasi_basis_size(&self) -> usize {
        self.0.quasi_basis_size
    }

    /// The scalar `sum u_i u_i*` of the quasi-basis, checked exactly.
    fn ledger(&self) -> PyResult<BigInt> {
        core::quasi_basis_ledger(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PartitionPlan(trace={}, n={}, quasi_basis_size={})", self.0.trace_q, self.0.n, self.0.quasi_basis_size)
    }
}

#[pyfunction]
fn trace_in_range(theta: &Theta, u: BigInt, v: BigInt) -> PyResult<bool> {
    Ok(core::trace_in_range(&TraceValue::new(u, v), theta.quadratic()?))
}

/// Splits a projection of trace `u + v theta` in `(1/2, 1)` into parts of
/// trace `< 1/2`.
#[pyfunction]
fn partition(theta: &Theta, u: BigInt, v: BigInt) -> PyResult<PartitionPlan> {
    core::partition(&TraceValue::new(u, v), theta.quadratic()?).map(PartitionPlan).map_err(err)
}

/// `"locally_trivial"`, or `"power"` with `n` the exponent.
#[pyfunction]
#[pyo3(signature = (kind, n = None))]
fn minimal_index(kind: &str, n: Option<BigInt>) -> PyResult<BigInt> {
    let kind = match (kind, n) {
        ("locally_trivial", None) => InclusionKind::LocallyTrivial,
        ("power", Some(n)) if n.is_positive() => InclusionKind::PowerSubalgebra(n),
        _ => return Err(PyValueError::new_err("expected kind 'locally_trivial', or 'power' with n >= 1")),
    };
    let r = core::minimal_index(&kind);
    debug_assert!(r.is_integer());
    Ok(r.to_integer())
}

#[pymodule]
fn _morita(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MoritaError", m.py().get_type::<MoritaError>())?;
    m.add_class::<Theta>()?;
    m.add_class::<QuadraticForm>()?;
    m.add_class::<Representation>()?;
    m.add_class::<Classification>()?;
    m.add_class::<SubalgebraClass>()?;
    m.add_class::<LtiCertificate>()?;
    m.add_class::<PartitionPlan>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(find_lti, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(corner_label, m)?)?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(splitting, m)?)?;
    m.add_function(wrap_pyfunction!(check_corollary, m)?)?;
    m.add_function(wrap_pyfunction!(trace_in_range, m)?)?;
    m.add_function(wrap_pyfunction!(partition, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_index, m)?)?;
    Ok(())
}
