"""Python bindings for the exact quartic-NVE pipeline."""
import json

from ._core import (
    InvariantPlaneError,
    ParseError,
    conditions,
    degree_test,
    format_polynomial,
    parse_potential,
    pullback_a5,
    simulate,
    variational_consistency,
)
from ._core import verify_quartic as _verify_quartic


def verify_quartic(trials=20, seed=0, nl_source="derived", perturb=None):
    """Certificate for the quartic theorem as a dict."""
    return json.loads(_verify_quartic(trials, seed, nl_source, perturb))


__all__ = [
    "InvariantPlaneError",
    "ParseError",
    "conditions",
    "degree_test",
    "format_polynomial",
    "parse_potential",
    "pullback_a5",
    "simulate",
    "variational_consistency",
    "verify_quartic",
]
