"""zetalab: numerical and symbolic laboratory for an Euler-product
factorization of the Riemann zeta function."""

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ZetaLabError
from .primes import PrimeTable, first_k_primes, primes_up_to, product_tail_bound
from .zeta import functional_equation_residual, log_gamma, zeta, zeta_derivative

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "ZetaLabError",
    "PrimeTable",
    "primes_up_to",
    "first_k_primes",
    "product_tail_bound",
    "zeta",
    "zeta_derivative",
    "log_gamma",
    "functional_equation_residual",
    "__version__",
]
