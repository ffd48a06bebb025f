"""Exact quasiconvexity analysis of one-dimensional functions.

Numbers are exchanged as ``fractions.Fraction``; infinite values as
``float('inf')``. Analysis results are plain dicts with the same layout as
the ``qcvx analyze`` JSON report.
"""

from ._qcvx import (
    Function,
    QcvxError,
    certificate,
    convexity_violation_set,
    corpus,
    is_quasiconvex,
    local_maxima_hypothesis,
    normalize_intervals,
    oracle,
    oracle_violation_set,
    semicontinuity,
    violation_set,
    witness_check,
)

__all__ = [
    "Function",
    "QcvxError",
    "certificate",
    "convexity_violation_set",
    "corpus",
    "is_quasiconvex",
    "local_maxima_hypothesis",
    "normalize_intervals",
    "oracle",
    "oracle_violation_set",
    "semicontinuity",
    "violation_set",
    "witness_check",
]
