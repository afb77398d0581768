"""Prime log-derivative series and the identities tying them to zeta.

Series implemented (p runs over primes, lambda = log p):

    h(s)      = - sum lambda * p^(-s)                    (Re s > 1)
    g(s)      = - sum lambda * p^(-2s) / (1 - p^(-s))    (Re s > 1/2)
    h(s,z)    = - sum lambda * p^(-s-z)  = h(s+z)
    u(s,z)    = - sum lambda * p^(-s-z) * p^(-s)(1-p^(-z)) / w,
                   w = 1 - p^(-s)(1 - p^(-z))
    v(s,z)    = - sum p^(-2s-z)(1-p^(-z))/w
                - sum_j sum_{k>=2} f_j^k / k + sum_j sum_{k>=2} p^(-(s+z)k)/k,
                   f_j = p^(-s-z)/w_j

u is the z-derivative of log xi minus h(s,z): the spec'd two constituents
(the derivative of the quadratic sum, plus sum f/(1-f) * df/dz) simplify by
exact algebra to the single closed form above; the pieces are exposed
separately for cross-checking.  In v the two double sums are combined
termwise using sum_{k>=2} x^k/k = -log(1-x) - x, which is exact, keeps
v(s,0) = 0 to the last bit, and avoids the individually slowly-convergent
pieces near Re(s+z) = 1/2.

Truncation policy
-----------------
Heads are summed over the first k primes (k = cfg.trunc_k).  Tails are
bounded by integrals over all integers beyond p_k:

    sum_{n>P} log(n) n^(-e) <= P^(1-e) * (log P/(e-1) + 1/(e-1)^2),  e > 1.

Where the head bound cannot meet the tolerance (h and g decay like
p^(-Re s), hopeless to certify directly below Re s ~ 2), the tail is
evaluated through zeta: the tail-restricted Euler product over p > p_k has
log-derivative

    L(w) = (zeta'/zeta)(w) + sum_{p<=P} lambda p^(-w)/(1-p^(-w)),

and Moebius inversion of prime powers gives

    tail of h at s  =  sum_{n>=1} mu(n) L(n s),
    tail of g at s  = -sum_{q>=2} mu(q) L(q s),

both geometrically convergent in n.  tail_estimate then records the
Moebius remainder plus an evaluation allowance.  This keeps every series
value certified at desk scale; the direct and accelerated routes agree
wherever both apply and are cross-tested against sieve segments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (
    DegenerateFactorError,
    DivergenceError,
    PrecisionError,
    SlowConvergenceError,
)
from .primes import shared_primes
from .zeta import zeta, zeta_derivative

__all__ = [
    "SeriesValue",
    "h_series",
    "g_series",
    "hz_series",
    "u_series",
    "v_series",
    "zeta_logderiv_residual",
    "zeta_logderiv_residual_dplus",
    "xi_logderiv_residual",
]


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series value with a certified bound on the omitted tail."""

    value: complex
    terms_used: int
    tail_estimate: float
    method: str = "direct"


def _csum(arr: np.ndarray) -> complex:
    """Compensated (error-free fsum) reduction of a complex array."""
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


def _mobius_table(n: int) -> list[int]:
    mu = [0] * (n + 1)
    mu[1] = 1
    for i in range(1, n + 1):
        for j in range(2 * i, n + 1, i):
            mu[j] -= mu[i]
    return mu


_MU = _mobius_table(64)


def _integral_tail(p_last: float, e: float) -> float:
    """Bound on sum_{n>P} n^(-e)."""
    if e <= 1.0:
        return math.inf
    return p_last ** (1.0 - e) / (e - 1.0)


def _log_integral_tail(p_last: float, e: float) -> float:
    """Bound on sum_{n>P} log(n) n^(-e)."""
    if e <= 1.0:
        return math.inf
    lp = math.log(p_last)
    return p_last ** (1.0 - e) * (lp / (e - 1.0) + 1.0 / (e - 1.0) ** 2)


def _vm_head(w: complex, k: int) -> complex:
    """sum_{p <= p_k} log(p) p^(-w) / (1 - p^(-w))."""
    table = shared_primes(k)
    lp = table.logs(k)
    x = np.exp(-w * lp)
    return _csum(lp * x / (1.0 - x))


def _tail_logderiv(w: complex, k: int, cfg: EvalConfig) -> complex:
    """Log-derivative of the Euler product restricted to p > p_k at w."""
    return zeta_derivative(w, cfg) / zeta(w, cfg) + _vm_head(w, k)


def _mobius_tail(s: complex, k: int, cfg: EvalConfig, from_g: bool) -> tuple[complex, float]:
    """Moebius-accelerated prime-power tail; returns (value, remainder bound)."""
    p_last = float(shared_primes(k)[k - 1])
    sig = s.real
    acc: list[complex] = []
    n = 2 if from_g else 1
    while True:
        if n > 64:
            raise PrecisionError("Moebius tail did not converge within 64 terms")
        bound = _log_integral_tail(p_last, n * sig)
        if bound < 1e-17:
            break
        if _MU[n] != 0:
            term = _MU[n] * _tail_logderiv(n * s, k, cfg)
            acc.append(-term if from_g else term)
        n += 1
    remainder = 2.0 * _log_integral_tail(p_last, n * sig)
    value = complex(math.fsum(v.real for v in acc), math.fsum(v.imag for v in acc))
    return value, remainder


def h_series(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """h(s) = -sum log(p) p^(-s); absolutely convergent only for Re s > 1."""
    s = complex(s)
    if s.real <= 1.0:
        raise DivergenceError("h(s) requires Re s > 1")
    k = cfg.trunc_k
    table = shared_primes(k)
    lp = table.logs(k)
    head = _csum(-lp * np.exp(-s * lp))
    bound = _log_integral_tail(float(table[k - 1]), s.real)
    if bound <= cfg.rel_tol:
        return SeriesValue(head, k, bound, "direct")
    tail, remainder = _mobius_tail(s, k, cfg, from_g=False)
    value = head + tail
    est = remainder + 1e-11 * (1.0 + abs(value))
    return SeriesValue(value, k, est, "tail-accelerated")


def g_series(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """g(s) = -sum log(p) p^(-2s)/(1-p^(-s)); converges for Re s > 1/2."""
    s = complex(s)
    if s.real <= 0.5:
        raise DivergenceError("g(s) requires Re s > 1/2")
    k = cfg.trunc_k
    table = shared_primes(k)
    lp = table.logs(k)
    a = np.exp(-s * lp)
    denom = 1.0 - a
    if np.abs(denom).min() <= cfg.rel_tol:
        raise DegenerateFactorError("1 - p^(-s) too close to zero")
    head = _csum(-lp * a * a / denom)
    p_last = float(table[k - 1])
    bound = _log_integral_tail(p_last, 2.0 * s.real) / max(
        0.1, 1.0 - p_last ** (-s.real)
    )
    if bound <= cfg.rel_tol:
        return SeriesValue(head, k, bound, "direct")
    tail, remainder = _mobius_tail(s, k, cfg, from_g=True)
    value = head + tail
    est = remainder + 1e-11 * (1.0 + abs(value))
    return SeriesValue(value, k, est, "tail-accelerated")


def hz_series(s: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """h(s,z) = -sum log(p) p^(-s-z); depends on s+z only, h(s,0) = h(s)."""
    w = complex(s) + complex(z)
    if w.real <= 1.0:
        raise DivergenceError("h(s,z) requires Re(s+z) > 1")
    return h_series(w, cfg)


def _uv_arrays(s: complex, z: complex, k: int):
    """Shared power arrays: a=p^-s, y=p^-z, A=p^-(s+z), w=1-a(1-y)."""
    table = shared_primes(k)
    lp = table.logs(k)
    a = np.exp(-s * lp)
    y = np.exp(-z * lp)
    A = a * y
    w = 1.0 - a * (1.0 - y)
    return lp, a, y, A, w


def u_series(s: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """u(s,z): the non-h part of the z-log-derivative of the xi product.

    Closed form per prime: u_j = -lambda * A * a * (1-y) / w with
    A = p^(-s-z), a = p^(-s), y = p^(-z), w = 1 - a(1-y).
    """
    s, z = complex(s), complex(z)
    sz = s + z
    if sz.real <= cfg.slow_guard:
        raise SlowConvergenceError(
            f"u(s,z) requires Re(s+z) > {cfg.slow_guard} (got {sz.real:.4f})"
        )
    k = cfg.trunc_k
    lp, a, y, A, w = _uv_arrays(s, z, k)
    f = A / w
    if np.abs(1.0 - f).min() <= cfg.rel_tol:
        raise DegenerateFactorError("1 - f_j too close to zero in u(s,z)")
    value = _csum(-lp * A * a * (1.0 - y) / w)
    p_last = float(shared_primes(k)[k - 1])
    e1 = s.real + sz.real
    e2 = 2.0 * sz.real
    wmin = max(0.1, float(np.abs(w).min()))
    tail = (_log_integral_tail(p_last, e1) + _log_integral_tail(p_last, e2)) / wmin
    return SeriesValue(value, k, tail, "direct")


def _u_constituents(s: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG):
    """The two sums u is specified through, in closed form (for cross-checks):
    d/dz of sum B(1-y)/w, and sum f/(1-f) df/dz."""
    s, z = complex(s), complex(z)
    k = cfg.trunc_k
    lp, a, y, A, w = _uv_arrays(s, z, k)
    B = a * A  # p^(-2s-z)
    piece1 = _csum(lp * B * ((2.0 * y - 1.0) * w + a * y * (1.0 - y)) / (w * w))
    piece2 = _csum(-lp * A * A / (w * w))
    return piece1, piece2


def v_series(s: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """v(s,z) = log xi(s,z) - log zeta(s+z), as the three-sum expansion.

    The quadratic double sums are combined termwise via the exact identity
    sum_{k>=2} x^k/k = -log(1-x) - x; each per-prime term vanishes exactly
    at z = 0.
    """
    s, z = complex(s), complex(z)
    sz = s + z
    if sz.real <= cfg.slow_guard:
        raise SlowConvergenceError(
            f"v(s,z) requires Re(s+z) > {cfg.slow_guard} (got {sz.real:.4f})"
        )
    if s.real + sz.real <= 1.0:
        raise DivergenceError("v(s,z) requires Re(2s+z) > 1")
    k = cfg.trunc_k
    lp, a, y, A, w = _uv_arrays(s, z, k)
    B = a * A
    f = A / w
    fmax = float(np.abs(f).max())
    bmax = float(np.abs(A).max())
    if fmax >= 1.0 or bmax >= 1.0:
        raise DivergenceError("|f_j| >= 1: log expansion of xi factor diverges")
    first = -B * (1.0 - y) / w
    combined = np.log((1.0 - f) / (1.0 - A)) + (f - A)
    value = _csum(first + combined)

    p_last = float(shared_primes(k)[k - 1])
    e1 = s.real + sz.real  # Re(2s+z)
    e2 = 2.0 * sz.real  # Re(2s+2z)
    wmin = max(0.1, float(np.abs(w).min()))
    tail_first = (_integral_tail(p_last, e1) + _integral_tail(p_last, e2)) / wmin
    m = max(fmax, bmax)
    mfac = m / max(1e-3, 1.0 - m)
    tail_combined = (
        (_integral_tail(p_last, 2.0 * sz.real + s.real) + _integral_tail(p_last, 3.0 * sz.real))
        * mfac
        / wmin
    )
    return SeriesValue(value, k, tail_first + tail_combined, "direct")


# ---------------------------------------------------------------------------
# identity residuals
# ---------------------------------------------------------------------------


def zeta_logderiv_residual(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """|zeta'(s) - (h(s)+g(s)) zeta(s)| / (1 + |zeta'(s)|) for Re s > 1.

    This is the complex-derivative form of the prime log-derivative
    identity zeta'/zeta = h + g.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DivergenceError("the log-derivative identity needs Re s > 1")
    h = h_series(s, cfg).value
    g = g_series(s, cfg).value
    dz = zeta_derivative(s, cfg)
    return abs(dz - (h + g) * zeta(s, cfg)) / (1.0 + abs(dz))


def zeta_logderiv_residual_dplus(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Diagnostic variant with the diagonal operator d/dx + d/dy, which on an
    analytic function equals (1+i) d/ds.  Surfaced for comparison only; it is
    not expected to vanish."""
    s = complex(s)
    if s.real <= 1.0:
        raise DivergenceError("the log-derivative identity needs Re s > 1")
    h = h_series(s, cfg).value
    g = g_series(s, cfg).value
    dz = (1.0 + 1.0j) * zeta_derivative(s, cfg)
    return abs(dz - (h + g) * zeta(s, cfg)) / (1.0 + abs(dz))


def xi_logderiv_residual(s: complex, z: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual of d(xi)/dz = (h(s,z) + u(s,z)) xi(s,z).

    The z-derivative is a Richardson-extrapolated central difference of the
    continued xi (steps fd_step and fd_step/2).
    """
    from .factors import xi_continued  # local import; factors depends on us

    s, z = complex(s), complex(z)
    if (s + z).real <= 1.0:
        raise DivergenceError("residual check needs Re(s+z) > 1 for h(s,z)")
    h = hz_series(s, z, cfg).value
    u = u_series(s, z, cfg).value
    xi0 = xi_continued(s, z, cfg)
    step = cfg.fd_step

    def central(hh: float) -> complex:
        return (xi_continued(s, z + hh, cfg) - xi_continued(s, z - hh, cfg)) / (2.0 * hh)

    d1 = central(step)
    d2 = central(step / 2.0)
    richardson = (4.0 * d2 - d1) / 3.0
    return abs(richardson - (h + u) * xi0) / (1.0 + abs(richardson))
