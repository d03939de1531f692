pub mod arith;
pub mod classify;
pub mod error;
pub mod field;
pub mod form;
pub mod index;
pub mod interval;
pub mod loctriv;
pub mod quadratic;

pub use classify::{classify, verify_class, witness_matrix, FormSolution, MoritaClassification, SubalgebraClass};
pub use error::{Error, Result};
pub use field::{check_corollary, fundamental_discriminant, kronecker, splitting, SplittingType};
pub use form::{QuadraticForm, RepresentationResult};
pub use index::{minimal_index, partition, quasi_basis_ledger, trace_in_range, InclusionKind, PartitionPlan, TraceValue};
pub use loctriv::{corner_label, find_lti, verify_certificate, LtiCertificate, Variant};
pub use quadratic::{CfExpansion, MinimalPolynomial, QuadraticIrrational, Sign, Theta, Unimodular};
