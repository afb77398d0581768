"""Prime generation and tail bounds for truncated Euler-type products.

The tail bound is the integral estimate over all integers beyond the last
prime used:

    sum_{j>k} p_j^(-x)  <=  sum_{n>p_k} n^(-x)  <=  int_{p_k}^inf t^(-x) dt
                         =  p_k^(1-x) / (x-1),          (x > 1)

which is valid because every prime beyond p_k is an integer beyond p_k.
For logarithms of truncated products with factor magnitudes b_j <= p_j^(-x)
the same quantity controls the log-tail:

    |log prod_{j>k} (1 +- b_j)|  <=  sum_{j>k} b_j / (1 - b_j)
                                 <=  B / (1 - p_{k+1}^(-x)),

with B = p_k^(1-x)/(x-1) the value returned by :func:`product_tail_bound`;
adding the linear tail B on top keeps the estimate safe in every use here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DivergenceError, EmptyTableError

__all__ = ["PrimeTable", "primes_up_to", "first_k_primes", "product_tail_bound"]


def _sieve(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, via the Sieve of Eratosthenes."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


@dataclass(frozen=True)
class PrimeTable:
    """Immutable ascending table of primes, complete up to ``limit``."""

    primes: np.ndarray
    limit: int
    _logs: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.primes, dtype=np.int64)
        if arr.size == 0:
            raise EmptyTableError("prime table may not be empty")
        if arr[0] != 2:
            raise ValueError("prime table must start at 2")
        if arr.size > 1 and not np.all(arr[1:] > arr[:-1]):
            raise ValueError("primes must strictly increase")
        arr.setflags(write=False)
        object.__setattr__(self, "primes", arr)
        logs = np.log(arr.astype(np.float64))
        logs.setflags(write=False)
        object.__setattr__(self, "_logs", logs)

    def __len__(self) -> int:
        return int(self.primes.size)

    def __getitem__(self, i):
        return int(self.primes[i])

    def __iter__(self):
        return iter(int(p) for p in self.primes)

    def as_floats(self, k: int | None = None) -> np.ndarray:
        """First k primes as float64 (all of them when k is None)."""
        k = len(self) if k is None else k
        return self.primes[:k].astype(np.float64)

    def logs(self, k: int | None = None) -> np.ndarray:
        """Natural logs of the first k primes."""
        k = len(self) if k is None else k
        return self._logs[:k]


_cache: dict[str, PrimeTable] = {}


def primes_up_to(n: int) -> PrimeTable:
    """All primes <= n, ascending.  n < 2 is an empty-table request."""
    if n < 2:
        raise EmptyTableError(f"no primes <= {n}")
    cached = _cache.get("table")
    if cached is None or cached.limit < n:
        cached = PrimeTable(_sieve(max(n, 1 << 17)), max(n, 1 << 17))
        _cache["table"] = cached
    idx = int(np.searchsorted(cached.primes, n, side="right"))
    return PrimeTable(cached.primes[:idx].copy(), n)


def first_k_primes(k: int) -> PrimeTable:
    """Exactly the first k primes, ascending.  k = 0 is an error."""
    if k < 1:
        raise EmptyTableError("need k >= 1 primes")
    cached = _cache.get("table")
    # Rosser-style overshoot, then doubling until the sieve holds k primes.
    bound = 1 << 17
    if k >= 6:
        import math

        bound = max(bound, int(1.2 * k * (math.log(k) + math.log(math.log(k)))) + 10)
    while cached is None or len(cached) < k:
        cached = PrimeTable(_sieve(bound), bound)
        _cache["table"] = cached
        bound *= 2
    return PrimeTable(cached.primes[:k].copy(), int(cached.primes[k - 1]))


def shared_primes(k: int) -> PrimeTable:
    """Cached table holding at least k primes (shared, not truncated).

    Evaluators slice what they need via ``as_floats(k)`` / ``logs(k)``;
    the underlying arrays are immutable so sharing is safe.
    """
    cached = _cache.get("table")
    if cached is None or len(cached) < k:
        first_k_primes(k)
        cached = _cache["table"]
    return cached


def product_tail_bound(x: float, k: int) -> float:
    """Upper bound on sum_{j>k} p_j^(-x): the integral tail p_k^(1-x)/(x-1).

    Requires x > 1; the module docstring records how the same value bounds
    log-tails of truncated products via the quadratic-sum estimate.
    """
    if x <= 1:
        raise DivergenceError(f"tail with exponent {x} <= 1 diverges")
    if k < 1:
        raise EmptyTableError("tail bound needs k >= 1")
    p_k = float(first_k_primes(k)[k - 1])
    return p_k ** (1.0 - x) / (x - 1.0)
