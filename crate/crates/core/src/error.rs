use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The triple does not describe a real quadratic irrational.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("matrix [[{a}, {b}], [{c}, {d}]] is not in GL(2,Z)")]
    NotUnimodular {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
    },

    #[error("form has non-positive discriminant {0}")]
    NotIndefinite(BigInt),

    #[error("form has square discriminant {0}")]
    SquareDiscriminant(BigInt),

    #[error("form ({0}, {1}, {2}) is not reduced")]
    NotReduced(BigInt, BigInt, BigInt),

    #[error("({d}, {t}) does not solve the unit equation for n = {n}")]
    NotASolution { n: BigInt, d: BigInt, t: BigInt },

    #[error("{0} is not a prime")]
    NotPrime(BigInt),

    #[error("leading coefficient {0} is not a prime")]
    LeadingCoefficientNotPrime(BigInt),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("trace {u} + {v}*theta is not in the open interval (1/2, 1)")]
    TraceOutOfRange { u: BigInt, v: BigInt },

    #[error("invalid partition plan: {0}")]
    InvalidPlan(String),

    #[error("cannot parse theta spec {0:?}: expected poly:k,l,m,+|- or surd:(p+q*sqrt(N))/r")]
    Parse(String),
}
