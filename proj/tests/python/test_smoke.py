"""Smoke test for the python bindings.

Plain asserts, no test framework: the CMake test just runs this file and
checks the exit code.
"""

import math
import sys

import harrisar1 as h


def close(x, y, tol=1e-12):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


# Exponent: pure power law evaluates exactly and scales by a = b^-alpha.
e = h.Exponent(lam=2.0, alpha=1.5, beta=0.0, b=0.5, increasing=True)
assert close(e(3.0), 2.0 * 3.0**1.5)
assert close(e.a, 0.5**-1.5)
assert close(e.invert(e(3.0)), 3.0, 1e-10)
assert h.Exponent.beta_bound(1.0, 0.5) > 0.0

pareto = {"family": "gen_semi_pareto", "alpha": 1.3, "b": 0.55, "k": 2}

# Transforms map into [0, 1] and carry their kind.
t = h.build_transform(pareto)
assert t.kind == "sf"
for x in (0.1, 1.0, 10.0):
    assert 0.0 <= t(x) <= 1.0
assert t(0.1) > t(10.0)

# Sampling is deterministic in the seed.
xs = h.sample(pareto, 64, seed=7)
ys = h.sample(pareto, 64, seed=7)
zs = h.sample(pareto, 64, seed=8)
assert xs == ys
assert xs != zs
assert all(math.isfinite(x) and x > 0.0 for x in xs)

# The check registry is reachable and agrees with the CLI's names.
names = h.check_names()
assert set(names) >= {
    "fixed_points",
    "negative_controls",
    "stationarity",
    "harris_pmf",
    "oracles",
    "samplers",
    "chains",
    "ssd_validity",
    "gap_preservation",
}

result = h.run_check("harris_pmf", seed=1)
assert result["passed"] is True
assert result["check"] == "harris_pmf"
assert result["reports"]

# Identity checks exposed directly: matched parameters (a = b**alpha for the
# pure power law) pass, mismatched fail.
fp = h.fixed_point(pareto, a=2.0**1.3, b=2.0, k=2, scheme="min")
assert fp["passed"] is True
fp_bad = h.fixed_point(pareto, a=1.1 * 2.0**1.3, b=2.0, k=2, scheme="min")
assert fp_bad["passed"] is False

st = h.stationarity(pareto, p=2.0**-1.3, b=2.0, k=2)
assert st["passed"] is True

# Scheme simulation: shapes and determinism.
config = {
    "seed": 5,
    "law": pareto,
    "scheme": {"combiner": "min", "p": 0.5, "b": 2.0, "k": 2},
    "n_paths": 3,
    "n_steps": 12,
}
paths = h.simulate_aggregate(config)
assert len(paths) == 3
assert all(len(p) == 13 for p in paths)
assert paths == h.simulate_aggregate(config)

print("python smoke test passed")
sys.exit(0)
