"""Evaluation configuration shared across the package.

Complex numbers are represented by Python's built-in ``complex`` throughout;
stored values are required to be finite (no NaN/inf components).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class EvalConfig:
    """Knobs controlling precision, truncation and guard thresholds.

    rel_tol      target relative error of the zeta evaluator and the series
                 truncation policies.
    series_cap   hard ceiling on the number of series terms any single
                 evaluation may consume.
    trunc_k      default number of primes in truncated Euler-type products
                 and prime series heads.
    epsilon      radius of the z-disk inside which the continued products
                 are trusted without the extra convergence condition.
    fd_step      base step for finite-difference derivative checks.
    slow_guard   continued evaluations require Re(s+z) > slow_guard; below
                 it the quadratic tails decay like sums of p^(-2*Re(s+z))
                 and are impractically slow.  Probes may relax this
                 deliberately (they report, rather than certify, values).
    singular_tol continued psi is declared singular when |xi| falls below
                 this threshold.
    """

    rel_tol: float = 1e-12
    series_cap: int = 2_000_000
    trunc_k: int = 10_000
    epsilon: float = 0.05
    fd_step: float = 1e-6
    slow_guard: float = 0.51
    singular_tol: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0):
            raise ValueError("rel_tol must be positive")
        if self.trunc_k < 1:
            raise ValueError("trunc_k must be >= 1")
        if not (self.epsilon > 0):
            raise ValueError("epsilon must be positive")
        if not (self.fd_step > 0):
            raise ValueError("fd_step must be positive")
        if self.series_cap < 1:
            raise ValueError("series_cap must be >= 1")

    def with_guard(self, slow_guard: float) -> "EvalConfig":
        """Copy of this config with a different slow-convergence guard."""
        return replace(self, slow_guard=slow_guard)


DEFAULT_CONFIG = EvalConfig()


def require_finite(value: complex, what: str = "value") -> complex:
    """Reject NaN/inf components; all stored complex values must be finite."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"{what} has non-finite components: {value!r}")
    return value
