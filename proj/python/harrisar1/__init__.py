"""Stationary AR(1) schemes for semi-stable laws: sampling, simulation, verification."""

import json as _json

try:
    from ._core import (
        Exponent,
        Transform,
        build_transform,
        check_names,
        fixed_point_json,
        run_check_json,
        sample,
        simulate_aggregate,
        stationarity_json,
        __version__,
    )
except ImportError:  # build-tree layout: _core sits next to the package on sys.path
    from _core import (
        Exponent,
        Transform,
        build_transform,
        check_names,
        fixed_point_json,
        run_check_json,
        sample,
        simulate_aggregate,
        stationarity_json,
        __version__,
    )

__all__ = [
    "Exponent",
    "Transform",
    "build_transform",
    "check_names",
    "fixed_point",
    "run_check",
    "sample",
    "simulate_aggregate",
    "stationarity",
    "__version__",
]


def run_check(name, seed=1):
    """Run one named verification check; returns the full report as a dict."""
    return _json.loads(run_check_json(name, seed))


def fixed_point(law, a, b, k, scheme):
    """Fixed-point residual report for one (law, scheme) pairing, as a dict."""
    return _json.loads(fixed_point_json(law, a, b, k, scheme))


def stationarity(law, p, b, k):
    """One-step stationarity balance report, as a dict."""
    return _json.loads(stationarity_json(law, p, b, k))
