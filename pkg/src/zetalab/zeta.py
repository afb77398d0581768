"""Riemann zeta, its s-derivative, complex log-gamma and the reflection
residual.

Evaluation strategy
-------------------
For 0 <= Re s < 4 the evaluator sums the alternating Dirichlet series
eta(s) = sum (-1)^(n-1) n^(-s) with the Chebyshev-weight convergence
acceleration of Cohen, Rodriguez Villegas and Zagier ("Convergence
acceleration of alternating series", Exp. Math. 9 (2000)): with n terms and
integer weights c_k derived from the Chebyshev polynomial value d = T_n(3),

    eta(s) ~ (1/d) * sum_{k<n} c_k (k+1)^(-s),

the error is bounded by (3+sqrt 8)^(-n) times the total variation of the
moment measure, which for (k+1)^(-s) grows like e^(pi*|Im s|/2) *
Gamma(Re s) * (2+|Im s|)^(max(0, 1/2-Re s)).  The term count is sized from
that bound; weights are exact integers, the weighted sum is accumulated with
error-free fsum, so round-off stays near machine level.  zeta follows as
eta(s) / (1 - 2^(1-s)).

The denominator 1 - 2^(1-s) has removable zeros at s = 1 - 2*pi*i*k/ln 2
(k != 0); inside a 5e-4 disk around those points both numerator and
denominator are expanded as Taylor series in s - s* and divided termwise.

For Re s >= 4 a plain Dirichlet sum with an integral tail bound is cheaper
and exact to tolerance.  For Re s < 0 the reflection formula

    zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)

is used (and differentiated by the product rule for the derivative).
log-gamma uses the 15-term Lanczos approximation with g = 607/128
(coefficients due to Godfrey; relative error ~1e-15 for Re z >= 0.5) plus
the recurrence log Gamma(z) = log Gamma(z+m) - sum log(z+j) to reach the
left half plane on the principal branch.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DegenerateInputError, PoleError, PrecisionError

__all__ = [
    "zeta",
    "zeta_derivative",
    "log_gamma",
    "functional_equation_residual",
]

_LN2 = math.log(2.0)
_LOG_PI = math.log(math.pi)
_LOG_CVZ = math.log(3.0 + math.sqrt(8.0))
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_MAX_CVZ_TERMS = 380  # float(d) must stay below the double-precision range


@lru_cache(maxsize=64)
def _cvz_weights(n: int) -> tuple[tuple[int, ...], int]:
    """Exact integer acceleration weights c_k (sign included) and divisor d."""
    t_prev, t = 1, 3
    for _ in range(n - 1):
        t_prev, t = t, 6 * t - t_prev
    d = t
    weights = []
    b = -1
    c = -d
    for k in range(n):
        c = b - c
        weights.append(c)
        num = 2 * (k + n) * (k - n) * b
        den = (2 * k + 1) * (k + 1)
        if num % den:  # the recurrence is integral; a remainder means a bug
            raise RuntimeError("acceleration weight recurrence left the integers")
        b = num // den
    return tuple(weights), d


def _eta_terms(s: complex, rel_tol: float) -> int:
    """Term count sizing the acceleration error below rel_tol (with margin)."""
    t = abs(s.imag)
    sig = s.real
    target = -math.log(rel_tol * 1e-3)
    penalty = 0.5 * math.pi * t + max(0.0, 0.5 - sig) * math.log(2.0 + t)
    if sig > 2.0:
        penalty += math.lgamma(sig)
    if sig < 1.0:
        penalty += max(0.0, -math.log(max(sig, 0.02)))
    n = int((target + penalty) / _LOG_CVZ) + 12
    return max(n, 16)


def _eta_derivs(s: complex, orders: tuple[int, ...], cfg: EvalConfig) -> dict[int, complex]:
    """eta^(m)(s) for each m in orders, via term-wise differentiated weights."""
    n = _eta_terms(s, cfg.rel_tol)
    if max(orders) > 0:
        n += 15  # log-weighted measure is slightly heavier
    if n > _MAX_CVZ_TERMS:
        raise PrecisionError(
            f"|Im s| = {abs(s.imag):.3g} needs {n} acceleration terms (cap {_MAX_CVZ_TERMS})",
            achieved=math.exp(-_MAX_CVZ_TERMS * _LOG_CVZ + 0.5 * math.pi * abs(s.imag)),
        )
    weights, d = _cvz_weights(n)
    parts = {m: ([], []) for m in orders}
    for k in range(n):
        lk = math.log(k + 1.0)
        term = float(weights[k]) * cmath.exp(-s * lk)
        for m in orders:
            v = term if m == 0 else term * (-lk) ** m
            re, im = parts[m]
            re.append(v.real)
            im.append(v.imag)
    fd = float(d)
    return {
        m: complex(math.fsum(parts[m][0]) / fd, math.fsum(parts[m][1]) / fd)
        for m in orders
    }


def _cexpm1(u: complex) -> complex:
    """exp(u) - 1 with full relative accuracy for small |u|."""
    if abs(u.real) > 0.5 or abs(u.imag) > 0.5:
        return cmath.exp(u) - 1.0
    em = math.expm1(u.real)
    cy = math.cos(u.imag)
    sy = math.sin(u.imag)
    return complex(em * cy - 2.0 * math.sin(0.5 * u.imag) ** 2, (em + 1.0) * sy)


def _eta_denominator(s: complex) -> tuple[complex, complex, int]:
    """(w, delta, k) with w = 1 - 2^(1-s) and s* = 1 - 2 pi i k / ln2 nearest."""
    k = round(-s.imag * _LN2 / (2.0 * math.pi))
    if k == 0:
        delta = s - 1.0
    else:
        delta = s - complex(1.0, -2.0 * math.pi * k / _LN2)
    w = -_cexpm1(-delta * _LN2)
    return w, delta, k


def _eta_route(s: complex, cfg: EvalConfig, order: int) -> complex:
    w, delta, k = _eta_denominator(s)
    if k == 0 or abs(delta) > 5e-4:
        if order == 0:
            eta = _eta_derivs(s, (0,), cfg)[0]
            return eta / w
        vals = _eta_derivs(s, (0, 1), cfg)
        wp = _LN2 * (1.0 - w)  # d/ds (1 - 2^(1-s)) = ln2 * 2^(1-s)
        return (vals[1] * w - vals[0] * wp) / (w * w)
    # Removable zero of the denominator: eta(s*) = 0 exactly, so divide the
    # Taylor series of eta and of w around s* termwise.
    s_star = s - delta
    ders = _eta_derivs(s_star, (1, 2, 3, 4, 5), cfg)
    c = [ders[m] / math.factorial(m) for m in (1, 2, 3, 4, 5)]
    x = delta * _LN2
    # w/delta = ln2 (1 - x/2 + x^2/6 - x^3/24 + x^4/120)
    den = _LN2 * (1 - x / 2 + x * x / 6 - x**3 / 24 + x**4 / 120)
    num = c[0] + delta * (c[1] + delta * (c[2] + delta * (c[3] + delta * c[4])))
    if order == 0:
        return num / den
    nump = c[1] + delta * (2 * c[2] + delta * (3 * c[3] + delta * 4 * c[4]))
    denp = _LN2 * _LN2 * (-0.5 + x / 3 - x * x / 8 + x**3 / 30)
    return (nump * den - num * denp) / (den * den)


def _dirichlet_direct(s: complex, cfg: EvalConfig, order: int) -> complex:
    """Plain Dirichlet sum for Re s >= 4 with an integral tail bound."""
    sig = s.real
    target = cfg.rel_tol * 1e-2
    n_terms = 16
    while True:
        if order == 0:
            tail = n_terms ** (1.0 - sig) / (sig - 1.0)
        else:
            ln_n = math.log(n_terms)
            tail = n_terms ** (1.0 - sig) * (ln_n / (sig - 1.0) + 1.0 / (sig - 1.0) ** 2)
        if tail <= target or n_terms >= cfg.series_cap:
            break
        n_terms *= 2
    re_parts, im_parts = [], []
    for n in range(1, n_terms + 1):
        ln_n = math.log(float(n))
        v = cmath.exp(-s * ln_n)
        if order == 1:
            v *= -ln_n
        re_parts.append(v.real)
        im_parts.append(v.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def _reflect(s: complex, cfg: EvalConfig, order: int) -> complex:
    """zeta (and zeta') for Re s < 0 via the reflection formula."""
    f = cmath.exp(s * _LN2 + (s - 1.0) * _LOG_PI)  # 2^s pi^(s-1)
    g = cmath.sin(0.5 * math.pi * s)
    h = cmath.exp(log_gamma(1.0 - s))
    z = zeta(1.0 - s, cfg)
    if order == 0:
        return f * g * h * z
    fp = f * (_LN2 + _LOG_PI)
    gp = 0.5 * math.pi * cmath.cos(0.5 * math.pi * s)
    hp = -h * _digamma(1.0 - s)
    zp = -zeta_derivative(1.0 - s, cfg)
    return fp * g * h * z + f * gp * h * z + f * g * hp * z + f * g * h * zp


def _check_pole(s: complex, cfg: EvalConfig) -> None:
    if abs(s - 1.0) <= cfg.rel_tol:
        raise PoleError("zeta has a pole at s = 1")


def zeta(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) anywhere except s = 1, to ~cfg.rel_tol relative error for
    -10 <= Re s <= 10 and |Im s| <= 100."""
    s = complex(s)
    _check_pole(s, cfg)
    if s.real < 0.0:
        return _reflect(s, cfg, 0)
    if s.real >= 4.0:
        return _dirichlet_direct(s, cfg, 0)
    return _eta_route(s, cfg, 0)


def zeta_derivative(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """d zeta / d s, same domain and accuracy model as :func:`zeta`."""
    s = complex(s)
    _check_pole(s, cfg)
    if s.real < 0.0:
        return _reflect(s, cfg, 1)
    if s.real >= 4.0:
        return _dirichlet_direct(s, cfg, 1)
    return _eta_route(s, cfg, 1)


# ---------------------------------------------------------------------------
# log-gamma (Lanczos, g = 607/128, 15 terms) and digamma
# ---------------------------------------------------------------------------

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _lanczos_series(z: complex) -> complex:
    acc = complex(_LANCZOS_C[0])
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z - 1.0 + i)
    return acc


def _log_gamma_core(z: complex) -> complex:
    """Principal log Gamma for Re z >= 0.5."""
    t = z + (_LANCZOS_G - 0.5)
    return (z - 0.5) * cmath.log(t) - t + _HALF_LOG_TWO_PI + cmath.log(_lanczos_series(z))


def log_gamma(s: complex) -> complex:
    """Principal branch of log Gamma(s), continuous off the negative real
    axis; poles at the non-positive integers are rejected."""
    s = complex(s)
    if s.real <= 0.5 and abs(s.imag) < 1e-12:
        nearest = round(s.real)
        if nearest <= 0 and abs(s.real - nearest) < 1e-12:
            raise PoleError(f"log_gamma pole at non-positive integer {nearest}")
    if s.real >= 0.5:
        return _log_gamma_core(s)
    m = int(math.ceil(0.5 - s.real))
    shifted = _log_gamma_core(s + m)
    # log Gamma(z) = log Gamma(z+m) - sum log(z+j); exact for the principal
    # branch off the cut, by analytic continuation of Gamma(z+1) = z Gamma(z).
    tail_re, tail_im = [], []
    for j in range(m):
        lg = cmath.log(s + j)
        tail_re.append(lg.real)
        tail_im.append(lg.imag)
    return shifted - complex(math.fsum(tail_re), math.fsum(tail_im))


def _digamma(z: complex) -> complex:
    """Digamma for Re z >= 0.5 (all internal callers are in that region)."""
    if z.real < 0.5:
        raise ValueError("internal digamma only implemented for Re z >= 0.5")
    t = z + (_LANCZOS_G - 0.5)
    series = _lanczos_series(z)
    dseries = complex(0.0)
    for i in range(1, len(_LANCZOS_C)):
        dseries -= _LANCZOS_C[i] / (z - 1.0 + i) ** 2
    return cmath.log(t) + (z - 0.5) / t - 1.0 + dseries / series


# ---------------------------------------------------------------------------
# functional-equation residual
# ---------------------------------------------------------------------------


def _log_cos_half_pi(s: complex) -> complex:
    """log cos(pi s / 2), stable for large |Im s| (dominant-exponential form)."""
    w = 0.5 * math.pi * s
    if abs(w.imag) <= 1.0:
        return cmath.log(cmath.cos(w))
    sgn = 1.0 if w.imag > 0 else -1.0
    return -1j * sgn * w - math.log(2.0) + cmath.log(1.0 + cmath.exp(2j * sgn * w))


def functional_equation_residual(s: complex, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """| 2^(1-s) Gamma(s) zeta(s) cos(pi s/2) - pi^s zeta(1-s) | scaled by
    1 + |pi^s zeta(1-s)|, with both sides assembled in the log domain."""
    s = complex(s)
    if abs(s) <= cfg.rel_tol or abs(s - 1.0) <= cfg.rel_tol:
        raise DegenerateInputError("functional equation degenerate at s in {0, 1}")
    if abs(s.imag) <= cfg.rel_tol and s.real < 0.5:
        nearest = round(s.real)
        if nearest <= 0 and abs(s.real - nearest) <= cfg.rel_tol:
            raise DegenerateInputError(
                "functional equation degenerate at non-positive integers"
            )
    log_left = (
        (1.0 - s) * _LN2
        + log_gamma(s)
        + cmath.log(zeta(s, cfg))
        + _log_cos_half_pi(s)
    )
    log_right = s * _LOG_PI + cmath.log(zeta(1.0 - s, cfg))
    left = cmath.exp(log_left)
    right = cmath.exp(log_right)
    return abs(left - right) / (1.0 + abs(right))
