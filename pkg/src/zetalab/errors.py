"""Exception taxonomy shared by all zetalab modules.

Every mathematically meaningful failure gets its own class so callers (and
the CLI exit-code mapping) can distinguish a pole from a divergent series
from a degenerate product factor.
"""


class ZetaLabError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(ZetaLabError):
    """An argument violates an operation's precondition."""


class EmptyTableError(DomainError):
    """A prime-table request that would produce no primes."""


class DegenerateInputError(DomainError):
    """An input where the requested relation collapses to 0/0."""


class PoleError(ZetaLabError):
    """Evaluation requested at (or within tolerance of) a pole."""


class PrecisionError(ZetaLabError):
    """The evaluator could not meet the requested tolerance.

    Carries ``achieved`` with the estimated error actually reached.
    """

    def __init__(self, message: str, achieved: float = float("inf")):
        super().__init__(message)
        self.achieved = achieved


class DivergenceError(ZetaLabError):
    """A series or product was requested outside its convergence region."""


class DegenerateFactorError(ZetaLabError):
    """A product factor or denominator is too close to zero to trust."""


class SlowConvergenceError(ZetaLabError):
    """Evaluation rejected: tails decay too slowly near the guard line."""


class SingularityError(ZetaLabError):
    """Continued evaluation hit a singularity (xi too close to zero)."""


class ConsistencyError(ZetaLabError):
    """An internal cross-check failed (e.g. Hardy Z imaginary residual)."""


class UnsupportedOrderError(DomainError):
    """A derivative order beyond the implemented closed-form table."""
