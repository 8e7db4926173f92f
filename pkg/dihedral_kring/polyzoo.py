"""
Polynomial Zoo
==============
The named integer polynomials in the variable w:

- Adams polynomials psi^i(w) from their closed binomial formula
- shifted Chebyshev polynomials 2*T_i((w+2)/2) - 2 from the recurrence
- the minimal polynomial f_n(w) of the odd case and its value at w = -2
- g_2k(w) = psi^(k+1)(w) - psi^(k-1)(w) of the even case

psi and the shifted Chebyshev polynomials are built along independent routes
so each checks the other.
"""

import logging
import math
from functools import lru_cache

from sympy import isprime

from .errors import ClaimViolationError, InexactDivisionError, InvalidParameterError
from .exactalg import IntPoly, binomial, poly_eval_int

logger = logging.getLogger(__name__)

W = IntPoly.variable()

# f_n(-2) = sin(k*pi/2) + cos(k*pi/2), indexed by k mod 4
MINUS2_PATTERN = (1, 1, -1, -1)


def _exact_div(what: str, numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivisionError(what, numerator, denominator)
    return q


def _require_odd(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise InvalidParameterError("n", n, "must be odd and >= 3")
    return (n - 1) // 2


@lru_cache(maxsize=None)
def adams_psi(i: int) -> IntPoly:
    """psi^i(w) = sum_j C(i,j) C(i+j-1,j) / C(2j-1,j) w^j"""
    if i < 1:
        raise InvalidParameterError("i", i, "must be >= 1")
    coeffs = [0]
    for j in range(1, i + 1):
        numerator = binomial(i, j) * binomial(i + j - 1, j)
        coeffs.append(_exact_div(f"psi^{i} coefficient {j}", numerator, binomial(2 * j - 1, j)))
    return IntPoly(tuple(coeffs))


@lru_cache(maxsize=None)
def shifted_chebyshev(i: int) -> IntPoly:
    """2*T_i((w+2)/2) - 2, via S_{j+1} = x*S_j - S_{j-1} with S_j(x) = 2*T_j(x/2), x = w + 2"""
    if i < 1:
        raise InvalidParameterError("i", i, "must be >= 1")
    x = W + 2
    prev, cur = IntPoly.constant(2), x
    for _ in range(i - 1):
        prev, cur = cur, x * cur - prev
    return cur - 2


@lru_cache(maxsize=None)
def f_min(n: int) -> IntPoly:
    """Monic f_n(w) of degree (n-1)/2 with constant term n"""
    half = _require_odd(n)
    coeffs = [n]
    product = 1
    for j in range(1, half):
        product *= n * n - (2 * j - 1) ** 2
        denominator = 4 ** j * math.factorial(2 * j + 1)
        coeffs.append(_exact_div(f"f_{n} coefficient {j}", n * product, denominator))
    coeffs.append(1)
    return IntPoly(tuple(coeffs))


def wf_identity_defect(n: int) -> IntPoly:
    """w*f_n(w) - (psi^((n+1)/2) - psi^((n-1)/2)); zero when the identity holds"""
    half = _require_odd(n)
    return W * f_min(n) - (adams_psi(half + 1) - adams_psi(half))


def chebyshev_sqrt_defect(n: int) -> IntPoly:
    """w*f_n(w)^2 - (2*T_n((w+2)/2) - 2)"""
    _require_odd(n)
    f = f_min(n)
    return W * f * f - shifted_chebyshev(n)


def f_at_minus2(n: int) -> int:
    """f_n(-2); raises ClaimViolationError if it is not a unit"""
    k = _require_odd(n)
    value = poly_eval_int(f_min(n), -2)
    if abs(value) != 1:
        raise ClaimViolationError(f"f_{n}(-2) = ±1", value)
    if value != MINUS2_PATTERN[k % 4]:
        logger.warning(f"f_{n}(-2) = {value} departs from the k mod 4 pattern")
    return value


def g_poly(k: int) -> IntPoly:
    if k < 2:
        raise InvalidParameterError("k", k, "must be >= 2")
    return adams_psi(k + 1) - adams_psi(k - 1)


def eisenstein_check(p: IntPoly, q: int) -> bool:
    """Eisenstein criterion at the prime q for a monic p"""
    if not p.is_monic() or p.degree < 1:
        raise InvalidParameterError("polynomial", str(p), "must be monic of degree >= 1")
    if not isprime(q):
        raise InvalidParameterError("q", q, "must be prime")
    lower = p.coeffs[:-1]
    return all(c % q == 0 for c in lower) and lower[0] % (q * q) != 0


POLY_KINDS = {
    "psi": adams_psi,
    "cheb": shifted_chebyshev,
    "fmin": f_min,
    "g": g_poly,
}


def named_poly(kind: str, index: int) -> IntPoly:
    """Look up one of the named families by its short name"""
    try:
        builder = POLY_KINDS[kind]
    except KeyError:
        raise InvalidParameterError("kind", kind, f"must be one of {', '.join(POLY_KINDS)}") from None
    return builder(index)
