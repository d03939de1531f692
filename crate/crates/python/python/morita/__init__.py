"""Exact Morita classification of unital subalgebras of quadratic irrational rotation algebras."""

from ._morita import (
    Classification,
    LtiCertificate,
    MoritaError,
    PartitionPlan,
    QuadraticForm,
    Representation,
    SubalgebraClass,
    Theta,
    check_corollary,
    classify,
    corner_label,
    find_lti,
    fundamental_discriminant,
    kronecker,
    minimal_index,
    partition,
    splitting,
    trace_in_range,
    verify_certificate,
)

__all__ = [
    "Classification",
    "LtiCertificate",
    "MoritaError",
    "PartitionPlan",
    "QuadraticForm",
    "Representation",
    "SubalgebraClass",
    "Theta",
    "check_corollary",
    "classify",
    "corner_label",
    "find_lti",
    "fundamental_discriminant",
    "kronecker",
    "minimal_index",
    "partition",
    "splitting",
    "trace_in_range",
    "verify_certificate",
]
