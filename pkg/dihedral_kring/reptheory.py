"""
Dihedral Representation Rings
=============================
Exact arithmetic in R(D_2n) over the irreducible basis

    odd  n = 2k+1:  [1, eta, rho_1 .. rho_k]
    even n = 2k:    [1, eta_1, eta_2, eta_3, rho_1 .. rho_(k-1)]

Products come from the structure constants (rho_i rho_j = rho_(i+j) + rho_(i-j),
with index folding). Characters valued in Z[x]/(x^n - 1) give a second,
independent route to every product.

Character convention for the one-dimensionals (rotation values are formal,
x^k standing for -1):

    class   eta  | eta_1  eta_2  eta_3
    r^j     1    | x^kj   x^kj   1
    s       -1   | 1      -1     -1
    rs      -    | -1     1      -1

swap_eta exchanges the eta_1 and eta_2 columns on the reflection classes.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import InvalidParameterError, RingMismatchError
from .exactalg import INT64_SAFE, IntPoly, cyclic_convolve

logger = logging.getLogger(__name__)


# =============================================================================
# RING SPECIFICATION
# =============================================================================

class RestrictionTarget(str, Enum):
    """Subgroups a representation can be restricted to"""
    ROTATION = "zn"
    REFLECTION_S = "z2s"
    REFLECTION_RS = "z2rs"


@dataclass(frozen=True)
class DihedralRingSpec:
    """R(D_2n) for a fixed n >= 3 and labeling of eta_1/eta_2"""
    n: int
    swap_eta: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise InvalidParameterError("n", self.n, "must be an integer >= 3 (D_4 is not handled)")

    @property
    def is_odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def k(self) -> int:
        return (self.n - 1) // 2 if self.is_odd else self.n // 2

    @property
    def first_rho(self) -> int:
        """Basis position of rho_1"""
        return 2 if self.is_odd else 4

    @property
    def rho_count(self) -> int:
        return self.k if self.is_odd else self.k - 1

    @property
    def basis(self) -> Tuple[str, ...]:
        ones = ("1", "eta") if self.is_odd else ("1", "eta1", "eta2", "eta3")
        return ones + tuple(f"rho{i}" for i in range(1, self.rho_count + 1))

    @property
    def size(self) -> int:
        return self.first_rho + self.rho_count

    @property
    def classes(self) -> Tuple[str, ...]:
        """Conjugacy classes: rotations r^0..r^k, then the reflection classes"""
        rotations = ("e",) + tuple(f"r^{j}" for j in range(1, self.k + 1))
        return rotations + (("s",) if self.is_odd else ("s", "rs"))

    def dims(self) -> Tuple[int, ...]:
        return (1,) * self.first_rho + (2,) * self.rho_count

    def swapped(self) -> "DihedralRingSpec":
        return DihedralRingSpec(self.n, not self.swap_eta)

    def zero(self) -> "VirtualRep":
        return VirtualRep(self, (0,) * self.size)

    def unit(self, index: int, coeff: int = 1) -> "VirtualRep":
        coeffs = [0] * self.size
        coeffs[index] = coeff
        return VirtualRep(self, tuple(coeffs))

    def one(self) -> "VirtualRep":
        return self.unit(0)

    def eta(self, a: int = 0) -> "VirtualRep":
        """eta (odd, a ignored) or eta_a for a in 1..3 (even)"""
        if self.is_odd:
            return self.unit(1)
        if a not in (1, 2, 3):
            raise InvalidParameterError("eta index", a, "must be 1, 2 or 3")
        return self.unit(a)

    def v(self, a: int = 0) -> "VirtualRep":
        """Reduction eta - 1 (odd) or eta_a - 1 (even)"""
        return self.eta(a) - self.one()

    def phi(self) -> "VirtualRep":
        return rho(self, 1) - 2 * self.one()

    def __str__(self) -> str:
        return f"R(D_{2 * self.n})" + (" [swapped eta]" if self.swap_eta else "")


# =============================================================================
# VIRTUAL REPRESENTATIONS
# =============================================================================

@dataclass(frozen=True)
class VirtualRep:
    ring: DihedralRingSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.size:
            raise InvalidParameterError(
                "coefficient vector", len(self.coeffs), f"expected {self.ring.size} entries for {self.ring}"
            )

    def _check(self, other: "VirtualRep") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        self._check(other)
        return VirtualRep(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "VirtualRep") -> "VirtualRep":
        return self + (-other)

    def __neg__(self) -> "VirtualRep":
        return VirtualRep(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualRep(self.ring, tuple(other * a for a in self.coeffs))
        return mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int) -> "VirtualRep":
        result = self.ring.one()
        for _ in range(e):
            result = mul(result, self)
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def dimension(self) -> int:
        return sum(c * d for c, d in zip(self.coeffs, self.ring.dims()))

    def __str__(self) -> str:
        return linear_combination(zip(self.coeffs, self.ring.basis))


def _fold(n: int, m: int) -> Dict[int, int]:
    """rho_m written in the basis, as {position: coefficient}"""
    m %= n
    m = min(m, n - m)
    if n % 2:
        return {0: 1, 1: 1} if m == 0 else {1 + m: 1}
    if m == 0:
        return {0: 1, 3: 1}
    if m == n // 2:
        return {1: 1, 2: 1}
    return {3 + m: 1}


@lru_cache(maxsize=None)
def _product_table(n: int) -> Tuple[Tuple[Tuple[Tuple[int, int], ...], ...], ...]:
    """Sparse structure constants: table[a][b] = ((position, coefficient), ...)"""
    ring = DihedralRingSpec(n)
    size, first = ring.size, ring.first_rho
    k = ring.k

    def product(a: int, b: int) -> Dict[int, int]:
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        if a >= first and b >= first:
            i, j = a - first + 1, b - first + 1
            out = dict(_fold(n, i + j))
            for pos, c in _fold(n, i - j).items():
                out[pos] = out.get(pos, 0) + c
            return out
        if a < first and b < first:
            # one-dimensionals multiply like Z_2 (odd) or Z_2 x Z_2 with eta_3 = eta_1 eta_2
            return {a ^ b: 1}
        one_dim, i = (a, b - first + 1) if a < first else (b, a - first + 1)
        if n % 2 or one_dim == 3:
            return {first + i - 1: 1}
        return _fold(n, k - i)

    return tuple(
        tuple(tuple(sorted(product(a, b).items())) for b in range(size)) for a in range(size)
    )


def rho(ring: DihedralRingSpec, i: int) -> VirtualRep:
    """rho_i for any integer i, folded into the basis"""
    coeffs = [0] * ring.size
    for pos, c in _fold(ring.n, i).items():
        coeffs[pos] += c
    return VirtualRep(ring, tuple(coeffs))


def mul(a: VirtualRep, b: VirtualRep) -> VirtualRep:
    a._check(b)
    table = _product_table(a.ring.n)
    out = [0] * a.ring.size
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            for pos, c in row[j]:
                out[pos] += c * x * y
    return VirtualRep(a.ring, tuple(out))


def eval_poly_at(p: IntPoly, a: VirtualRep) -> VirtualRep:
    """p(a) by Horner's rule; constants act through the trivial representation"""
    one = a.ring.one()
    result = a.ring.zero()
    for c in reversed(p.coeffs):
        result = mul(result, a) + c * one
    return result


# =============================================================================
# CHARACTERS
# =============================================================================

@dataclass(frozen=True)
class ClassFunction:
    """Per-class values in Z[x]/(x^n - 1), each a length-n coefficient vector"""
    n: int
    values: Tuple[Tuple[int, ...], ...]

    def _check(self, other: "ClassFunction") -> None:
        if self.n != other.n or len(self.values) != len(other.values):
            raise RingMismatchError(f"class functions mod x^{self.n}-1", f"mod x^{other.n}-1")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(
            self.n,
            tuple(tuple(x + y for x, y in zip(a, b)) for a, b in zip(self.values, other.values)),
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return ClassFunction(self.n, tuple(tuple(other * x for x in value) for value in self.values))
        self._check(other)
        return ClassFunction(
            self.n, tuple(cyclic_convolve(a, b, self.n) for a, b in zip(self.values, other.values))
        )

    __rmul__ = __mul__

    def scalar_at(self, index: int) -> int:
        """Integer value at a class whose value is a constant"""
        value = self.values[index]
        if any(value[1:]):
            raise InvalidParameterError("class value", value, "is not an integer constant")
        return value[0]


def _monomial(n: int, e: int, c: int = 1) -> List[int]:
    out = [0] * n
    out[e % n] += c
    return out


@lru_cache(maxsize=None)
def _basis_characters(ring: DihedralRingSpec) -> Tuple[ClassFunction, ...]:
    n, k = ring.n, ring.k
    rotations = range(k + 1)
    if ring.is_odd:
        reflection_values = {0: (1,), 1: (-1,)}
    else:
        s1, s2 = (-1, 1) if ring.swap_eta else (1, -1)
        reflection_values = {0: (1, 1), 1: (s1, -s1), 2: (s2, -s2), 3: (-1, -1)}
    reflection_count = 1 if ring.is_odd else 2

    chars = []
    for pos in range(ring.size):
        values = []
        if pos < ring.first_rho:
            for j in rotations:
                exponent = k * j if (not ring.is_odd and pos in (1, 2)) else 0
                values.append(tuple(_monomial(n, exponent)))
            values.extend(tuple(_monomial(n, 0, c)) for c in reflection_values[pos])
        else:
            i = pos - ring.first_rho + 1
            for j in rotations:
                value = _monomial(n, i * j)
                value[(-i * j) % n] += 1
                values.append(tuple(value))
            values.extend((0,) * n for _ in range(reflection_count))
        chars.append(ClassFunction(n, tuple(values)))
    return tuple(chars)


@lru_cache(maxsize=None)
def _character_matrix(ring: DihedralRingSpec) -> np.ndarray:
    """Basis characters as rows, flattened over (class, exponent); entries lie in [-2, 2]"""
    return np.array(
        [[x for value in chi.values for x in value] for chi in _basis_characters(ring)],
        dtype=np.int64,
    )


def character(a: VirtualRep) -> ClassFunction:
    n = a.ring.n
    matrix = _character_matrix(a.ring)
    bound = max((abs(c) for c in a.coeffs), default=0)
    if 2 * bound * a.ring.size < INT64_SAFE:
        flat = np.asarray(a.coeffs, dtype=np.int64) @ matrix
    else:
        flat = np.asarray(a.coeffs, dtype=object) @ matrix.astype(object)
    flat = [int(x) for x in flat]
    return ClassFunction(n, tuple(tuple(flat[i:i + n]) for i in range(0, len(flat), n)))


def verify_mul_by_characters(a: VirtualRep, b: VirtualRep) -> bool:
    """Structure-constant product against the pointwise character product"""
    return character(mul(a, b)) == character(a) * character(b)


# =============================================================================
# RESTRICTION
# =============================================================================

def restrict(a: VirtualRep, target: RestrictionTarget) -> Tuple[int, ...]:
    """Restriction to Z_n (basis sigma^0..sigma^(n-1)) or to a reflection Z_2 (basis 1, tau)"""
    target = RestrictionTarget(target)
    chi = character(a)
    if target is RestrictionTarget.ROTATION:
        return chi.values[1]
    reflection = len(a.ring.classes) - 1
    if target is RestrictionTarget.REFLECTION_S and not a.ring.is_odd:
        reflection -= 1
    trace = chi.scalar_at(reflection)
    dim = a.dimension
    return ((dim + trace) // 2, (dim - trace) // 2)


def cyclic_group_ring_mul(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """Product in the representation ring Z[sigma]/(sigma^m - 1) of a cyclic group"""
    if len(a) != len(b):
        raise RingMismatchError(f"R(Z_{len(a)})", f"R(Z_{len(b)})")
    return cyclic_convolve(a, b, len(a))


# =============================================================================
# DISPLAY AND SAMPLING
# =============================================================================

def reduction_labels(ring: DihedralRingSpec) -> Tuple[str, ...]:
    """Names of basis element minus its dimension: v, v1.., phi, (rho_i-2)"""
    ones = ("v",) if ring.is_odd else ("v1", "v2", "v3")
    rhos = tuple("phi" if i == 1 else f"(rho{i}-2)" for i in range(1, ring.rho_count + 1))
    return ("1",) + ones + rhos


def linear_combination(terms: Iterable[Tuple[int, str]]) -> str:
    """Render sum c*label; the label '1' stands for the constant"""
    parts = []
    for c, label in terms:
        if not c:
            continue
        if label == "1":
            body = str(abs(c))
        else:
            body = label if abs(c) == 1 else f"{abs(c)}*{label}"
        if parts:
            parts.append(("- " if c < 0 else "+ ") + body)
        else:
            parts.append(("-" if c < 0 else "") + body)
    return " ".join(parts) if parts else "0"


def reduced_expression(a: VirtualRep) -> str:
    """a written as dim(a) plus a combination of reductions, e.g. '-2*v3'"""
    labels = reduction_labels(a.ring)
    return linear_combination([(a.dimension, "1")] + list(zip(a.coeffs[1:], labels[1:])))


def random_element(ring: DihedralRingSpec, rng: np.random.Generator, bound: int = 3) -> VirtualRep:
    """Uniform coefficients in [-bound, bound]"""
    draws = rng.integers(-bound, bound + 1, size=ring.size)
    return VirtualRep(ring, tuple(int(x) for x in draws))

