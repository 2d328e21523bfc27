"""Exact first-passage-time sampling for the symmetric linear boundary."""

from ._linfpt import (
    CalibrationFailureError,
    UnresolvedComparisonError,
    UnsupportedBoundaryError,
    calibrate_envelope,
    cdf,
    conditional_cdf,
    density,
    ks_statistic,
    prob_finite,
    sample,
    tail_index_q,
    verify_envelope,
    verify_left_tail,
    verify_right_tail,
)

__all__ = [
    "CalibrationFailureError",
    "UnresolvedComparisonError",
    "UnsupportedBoundaryError",
    "calibrate_envelope",
    "cdf",
    "conditional_cdf",
    "density",
    "ks_statistic",
    "prob_finite",
    "sample",
    "tail_index_q",
    "verify_envelope",
    "verify_left_tail",
    "verify_right_tail",
]
