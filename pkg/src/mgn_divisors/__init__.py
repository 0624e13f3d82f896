"""Exact-arithmetic divisor classes on moduli spaces of stable pointed curves.

Core data model lives in `picard`, the one-parameter divisor family in
`family`, the Chern-class engine in `grr`, pullbacks in `pullbacks`,
general-type certificates in `certificates`, and the verification sweeps in
`checks`.  Everything computes over exact rationals and polynomials from
`exact`; no floating point anywhere.
"""

from .exact import LinearSystem, Poly, parse_rat, rat, rat_str, solve_linear
from .family import (
    b0,
    b1,
    b_from_pic12,
    balanced_pairs,
    gn_pair,
    quad_class,
    tilde_b,
    verify_b1_recurrence,
    verify_balance,
    verify_tilde_recurrence,
)
from .picard import (
    BoundaryIndex,
    Coefficient,
    DivisorClass,
    InsufficientInformationError,
    MalformedClassError,
    PicardError,
    Space,
    SpaceMismatchError,
    TestCurve,
    UnmarkedClass,
    UnstableIndexError,
    canonical_index,
    class_from_dict,
    class_to_dict,
    deserialize,
    intersect_test_curve,
    serialize,
)
from .grr import FiberwiseLineBundle, c1_pushforward, porteous_equal_rank, uniform_bundle
from .pullbacks import ClutchingMap, TailAttachment, clutch_pullback, forgetful_pullback
from .certificates import (
    Certificate,
    CertificateError,
    canonical_class,
    perturbation_sound,
    solve_certificate,
)
from .presets import certify

__all__ = [
    "BoundaryIndex",
    "Certificate",
    "CertificateError",
    "ClutchingMap",
    "Coefficient",
    "DivisorClass",
    "FiberwiseLineBundle",
    "InsufficientInformationError",
    "LinearSystem",
    "MalformedClassError",
    "PicardError",
    "Poly",
    "Space",
    "SpaceMismatchError",
    "TailAttachment",
    "TestCurve",
    "UnmarkedClass",
    "UnstableIndexError",
    "b0",
    "b1",
    "b_from_pic12",
    "balanced_pairs",
    "c1_pushforward",
    "canonical_class",
    "canonical_index",
    "certify",
    "class_from_dict",
    "class_to_dict",
    "clutch_pullback",
    "deserialize",
    "forgetful_pullback",
    "gn_pair",
    "intersect_test_curve",
    "parse_rat",
    "perturbation_sound",
    "porteous_equal_rank",
    "quad_class",
    "rat",
    "rat_str",
    "serialize",
    "solve_certificate",
    "solve_linear",
    "tilde_b",
    "uniform_bundle",
    "verify_b1_recurrence",
    "verify_balance",
    "verify_tilde_recurrence",
]
