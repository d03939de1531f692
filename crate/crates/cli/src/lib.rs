//! `morita` command line. [`run`] takes the full argument vector and returns
//! the exit code together with what would be written to stdout and stderr,
//! so the binary is a thin wrapper and tests need no subprocess.

mod corpus;
mod json;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use morita_core::form::brute_force_search;
use morita_core::{
    check_corollary, classify, corner_label, find_lti, minimal_index, partition, quasi_basis_ledger, splitting,
    trace_in_range, verify_class, Error, InclusionKind, QuadraticForm, QuadraticIrrational, Sign, Theta, TraceValue,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "morita", version, about = "Morita-equivalent subalgebras of irrational rotation algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the subalgebras A_{n theta} of A_theta.
    Classify {
        /// poly:k,l,m,+|-  or  surd:(p+q*sqrt(N))/r  or  nonquadratic
        theta: String,
    },
    /// Decide A x^2 + B xy + C y^2 = rhs for rhs = 1 or -1.
    #[command(allow_negative_numbers = true)]
    SolveForm {
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        rhs: String,
        /// Also run the brute-force scan up to this radius.
        #[arg(long)]
        oracle_bound: Option<u64>,
    },
    /// List locally trivial inclusion certificates.
    Loctriv { theta: String },
    /// Splitting of a prime in Q(theta).
    #[command(allow_negative_numbers = true)]
    Splitting {
        theta: String,
        /// Defaults to the leading coefficient when it is prime.
        #[arg(long)]
        prime: Option<String>,
    },
    /// Partition plan and quasi-basis ledger for a projection trace u + v theta.
    #[command(allow_negative_numbers = true)]
    Index {
        theta: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        trace: Vec<String>,
    },
    /// Continued fraction expansion.
    Cf {
        theta: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Run the built-in examples.
    Corpus,
}

/// What went wrong, and which exit code it maps to.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Step = Result<(Value, String, i32), Failure>;

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => usage_outcome(None, text),
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok((mut doc, summary, code)) => {
            doc["command"] = json!(name);
            doc["ok"] = json!(code == EXIT_OK);
            Outcome { code, stdout: render(&doc), stderr: summary }
        }
        Err(Failure::Usage(msg)) => usage_outcome(Some(name), msg),
        Err(Failure::Domain(e)) => {
            let doc = json!({
                "command": name,
                "ok": false,
                "error": { "kind": json::error_kind(&e), "message": e.to_string() },
            });
            Outcome { code: EXIT_DOMAIN, stdout: render(&doc), stderr: format!("error: {e}\n") }
        }
    }
}

fn usage_outcome(command: Option<&str>, msg: String) -> Outcome {
    let doc = json!({
        "command": command,
        "ok": false,
        "error": { "kind": "usage", "message": msg.trim_end() },
    });
    let stderr = if msg.ends_with('\n') { msg } else { msg + "\n" };
    Outcome { code: EXIT_USAGE, stdout: render(&doc), stderr }
}

fn render(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("JSON values always serialize") + "\n"
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::SolveForm { .. } => "solve-form",
        Command::Loctriv { .. } => "loctriv",
        Command::Splitting { .. } => "splitting",
        Command::Index { .. } => "index",
        Command::Cf { .. } => "cf",
        Command::Corpus => "corpus",
    }
}

fn dispatch(c: Command) -> Step {
    match c {
        Command::Classify { theta } => cmd_classify(&parse_theta(&theta)?),
        Command::SolveForm { a, b, c, rhs, oracle_bound } => {
            let f = QuadraticForm::new(parse_int(&a)?, parse_int(&b)?, parse_int(&c)?);
            let rhs = match rhs.trim() {
                "1" | "+1" => Sign::Plus,
                "-1" => Sign::Minus,
                other => return Err(Failure::Usage(format!("--rhs must be 1 or -1, got {other:?}"))),
            };
            cmd_solve_form(&f, rhs, oracle_bound)
        }
        Command::Loctriv { theta } => cmd_loctriv(&parse_quadratic(&theta)?),
        Command::Splitting { theta, prime } => {
            let prime = prime.as_deref().map(parse_int).transpose()?;
            cmd_splitting(&parse_quadratic(&theta)?, prime)
        }
        Command::Index { theta, trace } => {
            let [u, v] = <[String; 2]>::try_from(trace)
                .map_err(|_| Failure::Usage("--trace takes exactly two integers U V".into()))?;
            let t = TraceValue::new(parse_int(&u)?, parse_int(&v)?);
            cmd_index(&parse_quadratic(&theta)?, &t)
        }
        Command::Cf { theta, terms } => cmd_cf(&parse_quadratic(&theta)?, terms),
        Command::Corpus => Ok(corpus::run()),
    }
}

fn parse_theta(s: &str) -> Result<Theta, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("bad theta spec {s:?}: {e}")))
}

fn parse_quadratic(s: &str) -> Result<QuadraticIrrational, Failure> {
    match parse_theta(s)? {
        Theta::Quadratic(x) => Ok(x),
        Theta::NonQuadratic => Err(Failure::Usage("this command needs a quadratic theta".into())),
    }
}

fn parse_int(s: &str) -> Result<BigInt, Failure> {
    s.trim().parse().map_err(|_| Failure::Usage(format!("not an integer: {s:?}")))
}

fn cmd_classify(theta: &Theta) -> Step {
    let c = classify(theta);
    let classes: Vec<Value> = c.classes.iter().map(|cl| json::class(cl, verify_class(theta, cl))).collect();
    let divisors: Vec<Value> = c
        .checks
        .iter()
        .map(|d| {
            json!({
                "n": json::int(&d.n),
                "alpha": json::int(&d.alpha),
                "form": json::form(&d.form),
                "plus": json::representation(&d.plus),
                "minus": json::representation(&d.minus),
            })
        })
        .collect();
    let labels = c.labels();
    let mut doc = json!({
        "theta": json::theta(theta),
        "divisors": divisors,
        "classes": classes,
        "labels": json::ints(&labels),
        "complete": c.complete,
    });
    if matches!(theta, Theta::NonQuadratic) {
        doc["note"] = json!("Theorem: non-quadratic case");
    }
    let summary = format!("{theta}: labels {}\n", join(&labels));
    Ok((doc, summary, EXIT_OK))
}

fn cmd_solve_form(f: &QuadraticForm, rhs: Sign, oracle_bound: Option<u64>) -> Step {
    let result = f.represents_unit(rhs)?;
    let mut doc = json!({
        "form": json::form(f),
        "discriminant": json::int(&f.discriminant()),
        "rhs": json::int(&rhs.to_bigint()),
        "result": json::representation(&result),
    });
    let mut summary = match result.witness() {
        Some((x, y)) => format!("{f} = {rhs}1 at ({x}, {y})\n"),
        None => format!("{f} = {rhs}1 has no solution\n"),
    };
    if let Some(bound) = oracle_bound {
        let found = brute_force_search(f, &rhs.to_bigint(), bound);
        // a scan can miss solutions beyond its bound but never invent one
        let consistent = found.is_none() || result.is_solvable();
        doc["oracle"] = json!({
            "bound": bound.to_string(),
            "solution": found.as_ref().map(|(x, y)| json!([json::int(x), json::int(y)])).unwrap_or(Value::Null),
            "agrees": found.is_some() == result.is_solvable(),
            "consistent": consistent,
        });
        let _ = writeln!(summary, "scan to radius {bound}: {}", match &found {
            Some((x, y)) => format!("({x}, {y})"),
            None => "nothing".into(),
        });
        if !consistent {
            return Ok((doc, summary, EXIT_DOMAIN));
        }
    }
    Ok((doc, summary, EXIT_OK))
}

fn cmd_loctriv(x: &QuadraticIrrational) -> Step {
    let certs = find_lti(x);
    let mut entries = Vec::new();
    for cert in &certs {
        let corner = corner_label(x, cert)?;
        entries.push(json::certificate(cert, Some(&corner)));
    }
    let mut labels: Vec<BigInt> = certs.iter().map(|c| c.label.clone()).collect();
    labels.sort();
    labels.dedup();
    let doc = json!({
        "theta": json::quadratic(x),
        "certificates": entries,
        "labels": json::ints(&labels),
        "has_locally_trivial_inclusion": !certs.is_empty(),
    });
    let summary = if certs.is_empty() {
        format!("{x}: no locally trivial inclusion\n")
    } else {
        format!("{x}: {} certificate(s), labels {}\n", certs.len(), join(&labels))
    };
    Ok((doc, summary, EXIT_OK))
}

fn cmd_splitting(x: &QuadraticIrrational, prime: Option<BigInt>) -> Step {
    let k = x.minpoly().k().clone();
    let p = prime.unwrap_or_else(|| k.clone());
    let (s, corollary, consistent) = if p == k {
        let r = check_corollary(x)?;
        let summary = json!({
            "labels": json::ints(&r.labels),
            "nontrivial": r.nontrivial,
            "consistent": r.consistent,
        });
        (r.splitting, summary, r.consistent)
    } else {
        (splitting(&p, &x.discriminant())?, Value::Null, true)
    };
    let doc = json!({
        "theta": json::quadratic(x),
        "prime": json::int(&p),
        "splitting": {
            "type": s.kind.to_string(),
            "fundamental_discriminant": json::int(&s.fundamental_discriminant),
            "kronecker": s.kronecker,
        },
        "corollary": corollary,
    });
    let summary = format!("{p} is {} in Q(sqrt({}))\n", s.kind, s.fundamental_discriminant);
    Ok((doc, summary, if consistent { EXIT_OK } else { EXIT_DOMAIN }))
}

fn cmd_index(x: &QuadraticIrrational, t: &TraceValue) -> Step {
    let plan = partition(t, x)?;
    let ledger = quasi_basis_ledger(&plan)?;
    let lti = minimal_index(&InclusionKind::LocallyTrivial);
    let doc = json!({
        "theta": json::quadratic(x),
        "trace": json::trace(t),
        "in_range": trace_in_range(t, x),
        "plan": json::plan(&plan),
        "parts_in_range": plan.parts.iter().all(|p| trace_in_range(p, x)),
        "ledger": json::int(&ledger),
        "minimal_index_locally_trivial": lti.to_string(),
    });
    let summary = format!("{} parts, quasi-basis of size {}, index {ledger}\n", plan.n, plan.quasi_basis_size);
    Ok((doc, summary, EXIT_OK))
}

fn cmd_cf(x: &QuadraticIrrational, terms: usize) -> Step {
    let cf = x.continued_fraction();
    let first: Vec<BigInt> = cf.terms().take(terms).cloned().collect();
    let doc = json!({
        "theta": json::quadratic(x),
        "preperiod": json::ints(&cf.preperiod),
        "period": json::ints(&cf.period),
        "terms": json::ints(&first),
    });
    let summary = format!("[{}; ({})]\n", join(&cf.preperiod), join(&cf.period));
    Ok((doc, summary, EXIT_OK))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
}
