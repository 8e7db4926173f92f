"""
Exact Algebra Core
==================
Big-integer polynomials, integer matrices, Smith normal form and integer
lattices. Everything here is exact: Python ints end to end, with a numpy
fast path for cyclic convolution only when the int64 range provably holds.

All values are immutable; every function is pure.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidParameterError

# |a_i| * |b_j| * terms must stay below this for the int64 path
INT64_SAFE = 1 << 62


# =============================================================================
# POLYNOMIALS
# =============================================================================

@dataclass(frozen=True)
class IntPoly:
    """Dense univariate integer polynomial, ascending degree, no trailing zeros"""
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidParameterError("exponent", e, "must be >= 0")
        result, base = IntPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        return poly_eval_int(self, x)

    def __str__(self) -> str:
        return format_poly(self, "w")


def format_poly(p: IntPoly, var: str = "w") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(tuple(a.coeff(i) + b.coeff(i) for i in range(n)))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_compose(outer: IntPoly, inner: IntPoly) -> IntPoly:
    """outer(inner(w)) by Horner's rule"""
    result = IntPoly()
    for c in reversed(outer.coeffs):
        result = poly_mul(result, inner) + c
    return result


def poly_eval_int(p: IntPoly, x: int) -> int:
    value = 0
    for c in reversed(p.coeffs):
        value = value * x + c
    return value


def poly_rem_monic(a: IntPoly, modulus: IntPoly) -> IntPoly:
    """Remainder of a modulo a monic polynomial (exact over Z)"""
    if not modulus.is_monic():
        raise InvalidParameterError("modulus", str(modulus), "must be monic")
    m = modulus.degree
    work = list(a.coeffs)
    for top in range(len(work) - 1, m - 1, -1):
        c = work[top]
        if c == 0:
            continue
        shift = top - m
        for i, mc in enumerate(modulus.coeffs):
            work[shift + i] -= c * mc
    return IntPoly(tuple(work[:m]))


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise InvalidParameterError("binomial arguments", (n, k), "must be non-negative")
    if k > n:
        raise InvalidParameterError("k", k, f"must be <= n={n}")
    return math.comb(n, k)


def cyclic_convolve(a: Sequence[int], b: Sequence[int], n: int) -> Tuple[int, ...]:
    """Product in Z[x]/(x^n - 1) of two length-n coefficient vectors"""
    amax = max((abs(x) for x in a), default=0)
    bmax = max((abs(x) for x in b), default=0)
    if amax == 0 or bmax == 0:
        return (0,) * n
    if amax * bmax * n < INT64_SAFE:
        full = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        folded = full[:n].copy()
        folded[: len(full) - n] += full[n:]
        return tuple(int(x) for x in folded)
    # exact path over the nonzero entries only
    a_terms = [(i, x) for i, x in enumerate(a) if x]
    b_terms = [(j, y) for j, y in enumerate(b) if y]
    out = [0] * n
    for i, x in a_terms:
        for j, y in b_terms:
            out[(i + j) % n] += x * y
    return tuple(out)


# =============================================================================
# MATRICES AND ABELIAN GROUPS
# =============================================================================

@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidParameterError("shape", (self.rows, self.cols), "must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidParameterError(
                "entries", len(self.entries), f"expected {self.rows * self.cols} for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != width:
                raise InvalidParameterError("row length", len(r), f"expected {width}")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group by invariant factors d_1 | d_2 | ... (0 = Z)"""
    invariant_factors: Tuple[int, ...] = ()

    @classmethod
    def from_summands(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Direct sum of cyclic groups Z_d (d = 0 meaning Z), canonicalized"""
        orders = [abs(int(d)) for d in orders]
        if any(d == 1 for d in orders):
            orders = [d for d in orders if d != 1]
        size = len(orders)
        diag = [[orders[i] if i == j else 0 for j in range(size)] for i in range(size)]
        return smith_normal_form(IntMatrix.from_rows(diag, size))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(())

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def order(self) -> Optional[int]:
        """Group order, None when infinite"""
        if self.rank:
            return None
        return math.prod(self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        return describe_summands(self.invariant_factors)


def describe_summands(orders: Sequence[int]) -> str:
    """Render a list of cyclic summand orders, e.g. (3, 2) -> 'Z_3⊕Z_2'"""
    if not orders:
        return "0"
    parts: List[str] = []
    i = 0
    while i < len(orders):
        d = orders[i]
        run = 1
        while i + run < len(orders) and orders[i + run] == d:
            run += 1
        label = "Z" if d == 0 else f"Z_{d}"
        if run > 3:
            parts.append(f"({label})^{run}")
        else:
            parts.extend([label] * run)
        i += run
    return "⊕".join(parts)


def _find_pivot(a: List[List[int]], t: int, nrows: int, ncols: int) -> Optional[Tuple[int, int]]:
    # smallest |entry|; ties go to the lowest row, then the lowest column
    best = None
    best_abs = 0
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            x = row[j]
            if x and (best is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
    return best


def _swap_into(a: List[List[int]], t: int, pivot: Tuple[int, int]) -> None:
    pi, pj = pivot
    if pi != t:
        a[t], a[pi] = a[pi], a[t]
    if pj != t:
        for row in a:
            row[t], row[pj] = row[pj], row[t]


def _diagonal(rows: Sequence[Sequence[int]], ncols: int) -> List[int]:
    a = [list(r) for r in rows]
    nrows = len(a)
    diag: List[int] = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _find_pivot(a, t, nrows, ncols)
        if pivot is None:
            break
        _swap_into(a, t, pivot)
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    clean = clean and a[t][j] == 0
            if clean:
                stray = next(
                    (i for i in range(t + 1, nrows) if any(a[i][j] % p for j in range(t + 1, ncols))),
                    None,
                )
                if stray is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[stray])]
                continue
            _swap_into(a, t, _find_pivot(a, t, nrows, ncols))
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_normal_form(m: IntMatrix) -> AbelianGroup:
    """Invariant factors of Z^cols / (row space of m)"""
    diag = _diagonal(m.to_rows(), m.cols)
    factors = [d for d in diag if d != 1]
    factors.extend([0] * (m.cols - len(diag)))
    return AbelianGroup(tuple(factors))


def abelian_group_from_presentation(num_gens: int, relations: Sequence[Sequence[int]]) -> AbelianGroup:
    if num_gens < 0:
        raise InvalidParameterError("num_gens", num_gens, "must be >= 0")
    return smith_normal_form(IntMatrix.from_rows(list(relations), num_gens))


# =============================================================================
# LATTICES
# =============================================================================

def echelon_form(rows: Sequence[Sequence[int]], ncols: int) -> List[Tuple[int, ...]]:
    """Integer row-echelon basis of the row lattice, pivots strictly increasing and positive"""
    work = [list(r) for r in rows if any(r)]
    basis: List[Tuple[int, ...]] = []
    for col in range(ncols):
        active = [r for r in work if r[col]]
        while len(active) > 1:
            piv = min(active, key=lambda r: abs(r[col]))
            reduced = []
            for r in work:
                if r is not piv and r[col]:
                    q = r[col] // piv[col]
                    r = [x - q * y for x, y in zip(r, piv)]
                if any(r):
                    reduced.append(r)
            work = reduced
            active = [r for r in work if r[col]]
        if active:
            piv = active[0]
            work = [r for r in work if r is not piv]
            basis.append(tuple(piv) if piv[col] > 0 else tuple(-x for x in piv))
    return basis


def lattice_contains(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Membership of vector in the lattice spanned by an echelon basis"""
    x = list(vector)
    for row in basis:
        c = next(i for i, e in enumerate(row) if e)
        if x[c] % row[c]:
            return False
        q = x[c] // row[c]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return not any(x)
