"""
K-Ring Presentations
====================
Presentations of K(BD_2n) by generators and relations, their lift into the
representation ring, truncated filtration quotients, and restriction images
in the cyclic K-rings Z[mu]/((1+mu)^m - 1).

A relation is audited by substituting v -> eta - 1, v_a -> eta_a - 1 and
phi -> rho_1 - 2 and expanding in R(D_2n). The result is its defect; a zero
defect certifies the relation in K(BD_2n).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .config import settings
from .errors import (
    GuardExceededError,
    InvalidParameterError,
    RingMismatchError,
    UnknownGeneratorError,
)
from .exactalg import (
    AbelianGroup,
    IntMatrix,
    IntPoly,
    abelian_group_from_presentation,
    binomial,
    echelon_form,
    format_poly,
    lattice_contains,
    poly_rem_monic,
    smith_normal_form,
)
from .polyzoo import adams_psi, f_at_minus2, f_min, g_poly
from .reptheory import (
    ClassFunction,
    DihedralRingSpec,
    RestrictionTarget,
    VirtualRep,
    character,
    reduced_expression,
    restrict,
)

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


# =============================================================================
# MULTIVARIATE POLYNOMIALS
# =============================================================================

@dataclass(frozen=True)
class MultiPoly:
    """Integer polynomial in named generators; terms sorted, no zero coefficients"""
    gens: Tuple[str, ...]
    terms: Tuple[Tuple[Exponents, int], ...] = ()

    def __post_init__(self):
        acc: Dict[Exponents, int] = {}
        for exps, c in self.terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.gens) or any(e < 0 for e in exps):
                raise InvalidParameterError("exponents", exps, f"need {len(self.gens)} non-negative entries")
            acc[exps] = acc.get(exps, 0) + int(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def constant(cls, gens: Sequence[str], c: int) -> "MultiPoly":
        return cls(tuple(gens), (((0,) * len(gens), c),))

    @classmethod
    def generator(cls, gens: Sequence[str], name: str) -> "MultiPoly":
        gens = tuple(gens)
        if name not in gens:
            raise UnknownGeneratorError(name, gens)
        exps = tuple(1 if g == name else 0 for g in gens)
        return cls(gens, ((exps, 1),))

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.constant(self.gens, other)
        if other.gens != self.gens:
            raise RingMismatchError(self.gens, other.gens)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return MultiPoly(self.gens, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.gens, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return MultiPoly(
            self.gens,
            tuple(
                (tuple(a + b for a, b in zip(ea, eb)), ca * cb)
                for ea, ca in self.terms
                for eb, cb in other.terms
            ),
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        result = MultiPoly.constant(self.gens, 1)
        for _ in range(e):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def substitute(self, images: Mapping[str, "MultiPoly"], target_gens: Sequence[str]) -> "MultiPoly":
        """Replace every generator by a polynomial over target_gens"""
        target_gens = tuple(target_gens)
        result = MultiPoly(target_gens)
        for exps, c in self.terms:
            term = MultiPoly.constant(target_gens, c)
            for name, e in zip(self.gens, exps):
                if e:
                    if name not in images:
                        raise UnknownGeneratorError(name, tuple(images))
                    term = term * images[name] ** e
            result = result + term
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        ordered = sorted(self.terms, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        for exps, c in ordered:
            mono = monomial_label(self.gens, exps)
            if mono == "1":
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if parts:
                parts.append(("- " if c < 0 else "+ ") + body)
            else:
                parts.append(("-" if c < 0 else "") + body)
        return " ".join(parts)


def monomial_label(gens: Sequence[str], exps: Sequence[int]) -> str:
    factors = [g if e == 1 else f"{g}^{e}" for g, e in zip(gens, exps) if e]
    return "*".join(factors) if factors else "1"


def poly_in(p: IntPoly, x: MultiPoly) -> MultiPoly:
    """p(x) by Horner's rule"""
    result = MultiPoly(x.gens)
    for c in reversed(p.coeffs):
        result = result * x + c
    return result


# =============================================================================
# PRESENTATIONS
# =============================================================================

class PresentationCase(str, Enum):
    ODD = "odd"
    EVEN_K2 = "even-k2"
    EVEN_K_ODD = "even-k-odd"
    EVEN_K_EVEN = "even-k-even"

    @classmethod
    def for_n(cls, n: int) -> "PresentationCase":
        if n % 2:
            return cls.ODD
        k = n // 2
        if k == 2:
            return cls.EVEN_K2
        return cls.EVEN_K_ODD if k % 2 else cls.EVEN_K_EVEN


@dataclass(frozen=True)
class RingPresentation:
    n: int
    generators: Tuple[str, ...]
    relations: Tuple[MultiPoly, ...]
    labels: Tuple[str, ...]
    case: PresentationCase
    swap_eta: bool = False

    def __post_init__(self):
        if len(self.labels) != len(self.relations):
            raise InvalidParameterError("labels", len(self.labels), f"expected {len(self.relations)}")
        for rel in self.relations:
            if rel.gens != self.generators:
                raise RingMismatchError(self.generators, rel.gens)
        if self.case is not PresentationCase.for_n(self.n):
            raise InvalidParameterError("case", self.case.value, f"does not match n={self.n}")

    @property
    def ring(self) -> DihedralRingSpec:
        return DihedralRingSpec(self.n, self.swap_eta)

    def gen(self, name: str) -> MultiPoly:
        return MultiPoly.generator(self.generators, name)


ODD_GENERATORS = ("v", "phi")
EVEN_GENERATORS = ("v2", "v3", "phi")
EVEN_AUX_GENERATORS = ("v1", "v2", "v3", "phi")


def _require_n(n: int) -> None:
    if not isinstance(n, int) or n <= 2:
        raise InvalidParameterError("n", n, "must be an integer >= 3")


def build_presentation(n: int, swap_eta: bool = False) -> RingPresentation:
    _require_n(n)
    case = PresentationCase.for_n(n)

    if case is PresentationCase.ODD:
        v, phi = (MultiPoly.generator(ODD_GENERATORS, g) for g in ODD_GENERATORS)
        relations = (
            v * v + 2 * v,
            v * phi + 2 * v,
            phi * poly_in(f_min(n), phi) - f_at_minus2(n) * v,
        )
        labels = ("relation 1", "relation 2", "relation 3")
        return RingPresentation(n, ODD_GENERATORS, relations, labels, case, swap_eta)

    k = n // 2
    v2, v3, phi = (MultiPoly.generator(EVEN_GENERATORS, g) for g in EVEN_GENERATORS)
    rel3 = v2 * phi - poly_in(adams_psi(k - 1), phi) + phi + 2 * v2
    if case is PresentationCase.EVEN_K_ODD:
        rel3 = rel3 + v3
    if case is PresentationCase.EVEN_K2:
        rel5 = v2 * v3 - 4 * phi - phi * phi + 2 * v2 + 2 * v3
    else:
        rel5 = v2 * v3 - poly_in(adams_psi(k), phi) + 2 * v2
        if case is PresentationCase.EVEN_K_ODD:
            rel5 = rel5 + v3
    relations = (
        v2 * v2 + 2 * v2,
        v3 * v3 + 2 * v3,
        rel3,
        v3 * phi + 2 * v3,
        rel5,
    )
    labels = tuple(f"relation {i}" for i in range(1, 6))
    return RingPresentation(n, EVEN_GENERATORS, relations, labels, case, swap_eta)


def lift_map(ring: DihedralRingSpec) -> Dict[str, VirtualRep]:
    """Images of the K-ring generators in R(D_2n)"""
    if ring.is_odd:
        return {"v": ring.v(), "phi": ring.phi()}
    return {"v1": ring.v(1), "v2": ring.v(2), "v3": ring.v(3), "phi": ring.phi()}


def lift(poly: MultiPoly, ring: DihedralRingSpec) -> VirtualRep:
    images = lift_map(ring)
    for name in poly.gens:
        if name not in images:
            raise UnknownGeneratorError(name, tuple(images))
    powers: Dict[Tuple[str, int], VirtualRep] = {}

    def power(name: str, e: int) -> VirtualRep:
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] if e == 1 else power(name, e - 1) * images[name]
        return powers[key]

    result = ring.zero()
    for exps, c in poly.terms:
        term = c * ring.one()
        for name, e in zip(poly.gens, exps):
            if e:
                term = term * power(name, e)
        result = result + term
    return result


def lift_relation_defect(n: int, rel: MultiPoly, swap_eta: bool = False) -> VirtualRep:
    return lift(rel, DihedralRingSpec(n, swap_eta))


def relation_character(rel: MultiPoly, ring: DihedralRingSpec) -> ClassFunction:
    """rel evaluated on the generator characters, multiplied pointwise in Z[x]/(x^n - 1)"""
    images = {name: character(rep) for name, rep in lift_map(ring).items()}
    for name in rel.gens:
        if name not in images:
            raise UnknownGeneratorError(name, tuple(images))
    powers: Dict[Tuple[str, int], ClassFunction] = {}

    def power(name: str, e: int) -> ClassFunction:
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] if e == 1 else power(name, e - 1) * images[name]
        return powers[key]

    one = character(ring.one())
    result = character(ring.zero())
    for exps, c in rel.terms:
        term = c * one
        for name, e in zip(rel.gens, exps):
            if e:
                term = term * power(name, e)
        result = result + term
    return result


# =============================================================================
# VERIFICATION
# =============================================================================

class CheckKind(str, Enum):
    RELATION = "relation"
    G_POLY = "g-poly"
    IDENTITY = "identity"


@dataclass(frozen=True)
class RelationCheck:
    label: str
    kind: CheckKind
    expression: str
    defect: VirtualRep

    @property
    def exact(self) -> bool:
        return self.defect.is_zero()

    @property
    def reduced(self) -> str:
        return reduced_expression(self.defect)


@dataclass(frozen=True)
class PresentationVerdict:
    n: int
    swap_eta: bool
    checks: Tuple[RelationCheck, ...]
    retry: Optional["PresentationVerdict"] = None

    @property
    def passed(self) -> bool:
        return all(check.exact for check in self.checks)

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.exact]


def auxiliary_identities(n: int) -> List[Tuple[str, MultiPoly]]:
    """Side identities among the reductions, each as lhs - rhs"""
    _require_n(n)
    if n % 2:
        v, phi = (MultiPoly.generator(ODD_GENERATORS, g) for g in ODD_GENERATORS)
        return [("v^2 = -2v", v * v + 2 * v), ("phi*v = v^2", phi * v - v * v)]
    v1, v2, v3, phi = (MultiPoly.generator(EVEN_AUX_GENERATORS, g) for g in EVEN_AUX_GENERATORS)
    identities = [
        ("v3 = v1 + v2 + v1*v2", v3 - (v1 + v2 + v1 * v2)),
        ("v1 = v2 + v3 + v2*v3", v1 - (v2 + v3 + v2 * v3)),
        ("v2^2 = v1*v2 + v2*v3", v2 * v2 - (v1 * v2 + v2 * v3)),
    ]
    if n == 4:
        identities.append(
            ("4phi = -v2^2 - v3^2 + v2*v3 - phi^2",
             4 * phi - (-(v2 * v2) - v3 * v3 + v2 * v3 - phi * phi))
        )
    return identities


def g_relation(n: int) -> MultiPoly:
    """g_2k(phi) over the even-case generators"""
    if n % 2 or n < 4:
        raise InvalidParameterError("n", n, "g_2k is defined for even n >= 4")
    phi = MultiPoly.generator(EVEN_GENERATORS, "phi")
    return poly_in(g_poly(n // 2), phi)


def verify_presentation(n: int, swap_eta: bool = False, retry: bool = True) -> PresentationVerdict:
    """Lift every relation, the g_2k identity and the side identities; retry swapped on failure"""
    pres = build_presentation(n, swap_eta)
    ring = pres.ring
    checks = [
        RelationCheck(label, CheckKind.RELATION, str(rel), lift(rel, ring))
        for label, rel in zip(pres.labels, pres.relations)
    ]
    if not ring.is_odd:
        g = g_relation(n)
        checks.append(RelationCheck(f"g_{n}(phi)", CheckKind.G_POLY, str(g), lift(g, ring)))
    for label, identity in auxiliary_identities(n):
        checks.append(RelationCheck(label, CheckKind.IDENTITY, str(identity), lift(identity, ring)))

    verdict = PresentationVerdict(n, swap_eta, tuple(checks))
    labeling = " [swapped eta]" if swap_eta else ""
    for check in verdict.failures:
        logger.warning(f"n={n}{labeling} {check.label}: defect {check.reduced}")
    if not verdict.passed and retry:
        logger.info(f"n={n}: retrying with the eta labeling swapped")
        verdict = PresentationVerdict(n, swap_eta, tuple(checks), verify_presentation(n, not swap_eta, False))
    logger.info(f"n={n}{labeling}: {'pass' if verdict.passed else 'defects found'}")
    return verdict


# =============================================================================
# TRUNCATED QUOTIENTS
# =============================================================================

class Grading(str, Enum):
    """TWISTED: u = phi - v_det in weight 2; TOTAL: every generator in weight 1"""
    TWISTED = "twisted"
    TOTAL = "total"


@dataclass(frozen=True)
class GradedPresentation:
    generators: Tuple[str, ...]
    weights: Tuple[int, ...]
    relations: Tuple[MultiPoly, ...]
    embed: Mapping[str, MultiPoly]

    def weight(self, exps: Exponents) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def convert(self, poly: MultiPoly, known: Sequence[str]) -> MultiPoly:
        for name in poly.gens:
            if name not in known:
                raise UnknownGeneratorError(name, tuple(known))
        return poly.substitute(self.embed, self.generators)


def graded_presentation(pres: RingPresentation, grading: Grading = Grading.TWISTED) -> GradedPresentation:
    grading = Grading(grading)
    if grading is Grading.TOTAL:
        gens = pres.generators
        embed = {g: MultiPoly.generator(gens, g) for g in gens}
        weights = (1,) * len(gens)
    else:
        det = "v" if pres.n % 2 else "v3"
        gens = tuple("u" if g == "phi" else g for g in pres.generators)
        embed = {g: MultiPoly.generator(gens, g) for g in pres.generators if g != "phi"}
        embed["phi"] = MultiPoly.generator(gens, "u") + MultiPoly.generator(gens, det)
        weights = tuple(2 if g == "u" else 1 for g in gens)
    relations = tuple(rel.substitute(embed, gens) for rel in pres.relations)
    return GradedPresentation(gens, weights, relations, embed)


def _monomials(weights: Sequence[int], lo: int, hi: int, guard: int) -> List[Exponents]:
    """Exponent vectors of weight lo..hi, sorted by (weight, exponents)"""
    found: List[Exponents] = []

    def walk(pos: int, budget: int, prefix: Tuple[int, ...]) -> Iterator[Exponents]:
        if pos == len(weights):
            yield prefix
            return
        for e in range(budget // weights[pos] + 1):
            yield from walk(pos + 1, budget - e * weights[pos], prefix + (e,))

    for exps in walk(0, hi, ()):
        w = sum(a * b for a, b in zip(weights, exps))
        if w >= lo:
            found.append(exps)
            if len(found) > guard:
                raise GuardExceededError(len(found), guard)
    found.sort(key=lambda e: (sum(a * b for a, b in zip(weights, e)), e))
    return found


def _check_matrix_size(
    graded: GradedPresentation, ncols: int, depth: int, guard: int, matrix_guard: Optional[int]
) -> None:
    """Refuse before elimination when the relation rows times columns exceed the matrix guard"""
    limit = matrix_guard or settings.MATRIX_GUARD
    cells = len(graded.relations) * len(_monomials(graded.weights, 0, depth - 1, guard)) * ncols
    if cells > limit:
        raise GuardExceededError(cells, limit, "matrix cells")


def _level_rows(graded: GradedPresentation, columns: Dict[Exponents, int], j: int, guard: int) -> List[List[int]]:
    """Rows rel * m truncated above weight j, for monomials m of weight < j"""
    multipliers = _monomials(graded.weights, 0, j - 1, guard)
    rows = []
    for rel in graded.relations:
        for m in multipliers:
            row = [0] * len(columns)
            for exps, c in rel.terms:
                shifted = tuple(a + b for a, b in zip(exps, m))
                w = graded.weight(shifted)
                if w == 0:
                    raise InvalidParameterError("relation", str(rel), "has a constant term")
                if w <= j:
                    row[columns[shifted]] += c
            if any(row):
                rows.append(row)
    return rows


@dataclass(frozen=True)
class TruncationTower:
    """Q_j = augmentation part of Z[gens]/(relations, weight > j) and gr_j = ker(Q_j -> Q_(j-1))"""
    n: int
    grading: Grading
    generators: Tuple[str, ...]
    weights: Tuple[int, ...]
    quotients: Tuple[AbelianGroup, ...]
    graded: Tuple[AbelianGroup, ...]

    @property
    def depth(self) -> int:
        return len(self.graded)

    def consistent(self) -> bool:
        """|Q_j| = |gr_j| * |Q_(j-1)| wherever the orders are finite"""
        previous = 1
        for q, g in zip(self.quotients, self.graded):
            if None not in (q.order, g.order, previous) and q.order != g.order * previous:
                return False
            previous = q.order
        return True


def truncated_quotient(
    pres: RingPresentation,
    depth: int,
    grading: Grading = Grading.TWISTED,
    guard: Optional[int] = None,
    matrix_guard: Optional[int] = None,
) -> TruncationTower:
    if depth < 1:
        raise InvalidParameterError("depth", depth, "must be >= 1")
    guard = guard or settings.MONOMIAL_GUARD
    graded = graded_presentation(pres, grading)
    all_columns = _monomials(graded.weights, 1, depth, guard)
    _check_matrix_size(graded, len(all_columns), depth, guard, matrix_guard)

    quotients, graded_pieces = [], []
    for j in range(1, depth + 1):
        cols = [m for m in all_columns if graded.weight(m) <= j]
        columns = {m: i for i, m in enumerate(cols)}
        start = sum(1 for m in cols if graded.weight(m) < j)
        basis = echelon_form(_level_rows(graded, columns, j, guard), len(cols))
        quotients.append(smith_normal_form(IntMatrix.from_rows(basis, len(cols))))
        top = [row[start:] for row in basis if _pivot(row) >= start]
        graded_pieces.append(abelian_group_from_presentation(len(cols) - start, top))
        logger.info(f"n={pres.n} {graded.generators} level {j}: Q={quotients[-1]} gr={graded_pieces[-1]}")

    return TruncationTower(
        pres.n, Grading(grading), graded.generators, graded.weights, tuple(quotients), tuple(graded_pieces)
    )


def _pivot(row: Sequence[int]) -> int:
    return next(i for i, x in enumerate(row) if x)


def defect_in_truncation(
    pres: RingPresentation,
    defect: MultiPoly,
    depth: int,
    grading: Grading = Grading.TWISTED,
    guard: Optional[int] = None,
    matrix_guard: Optional[int] = None,
) -> bool:
    """Whether defect vanishes in Q_depth"""
    if depth < 1:
        raise InvalidParameterError("depth", depth, "must be >= 1")
    if defect.is_zero():
        return True
    guard = guard or settings.MONOMIAL_GUARD
    graded = graded_presentation(pres, grading)
    element = graded.convert(defect, pres.generators)

    cols = _monomials(graded.weights, 1, depth, guard)
    _check_matrix_size(graded, len(cols), depth, guard, matrix_guard)
    columns = {m: i for i, m in enumerate(cols)}
    vector = [0] * len(cols)
    for exps, c in element.terms:
        w = graded.weight(exps)
        if w == 0:
            return False
        if w <= depth:
            vector[columns[exps]] += c
    basis = echelon_form(_level_rows(graded, columns, depth, guard), len(cols))
    return lattice_contains(basis, vector)


# =============================================================================
# CYCLIC K-RINGS
# =============================================================================

@dataclass(frozen=True)
class CyclicKRingElt:
    """Element of K(BZ_m) = Z[mu]/((1+mu)^m - 1) in the basis mu^0..mu^(m-1)"""
    m: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise InvalidParameterError("m", self.m, "must be >= 2")
        if len(self.coeffs) != self.m:
            raise InvalidParameterError("coefficient vector", len(self.coeffs), f"expected {self.m} entries")

    def _check(self, other: "CyclicKRingElt") -> None:
        if self.m != other.m:
            raise RingMismatchError(f"K(BZ_{self.m})", f"K(BZ_{other.m})")

    def as_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __add__(self, other: "CyclicKRingElt") -> "CyclicKRingElt":
        self._check(other)
        return CyclicKRingElt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclicKRingElt") -> "CyclicKRingElt":
        self._check(other)
        return CyclicKRingElt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "CyclicKRingElt") -> "CyclicKRingElt":
        self._check(other)
        return cyclic_reduce(self.as_poly() * other.as_poly(), self.m)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.as_poly(), "mu")


MU = IntPoly.variable()


@lru_cache(maxsize=None)
def cyclic_modulus(m: int) -> IntPoly:
    """(1+mu)^m - 1, monic of degree m"""
    return IntPoly((0,) + tuple(binomial(m, i) for i in range(1, m + 1)))


def cyclic_reduce(e: IntPoly, m: int) -> CyclicKRingElt:
    if m < 2:
        raise InvalidParameterError("m", m, "must be >= 2")
    rem = poly_rem_monic(e, cyclic_modulus(m))
    return CyclicKRingElt(m, tuple(rem.coeff(i) for i in range(m)))


def k_image(a: VirtualRep, target: RestrictionTarget = RestrictionTarget.ROTATION) -> CyclicKRingElt:
    """Restriction of a to a cyclic subgroup, written in mu via sigma^i -> (1+mu)^i"""
    target = RestrictionTarget(target)
    values = restrict(a, target)
    m = a.ring.n if target is RestrictionTarget.ROTATION else 2
    out = [0] * m
    for c, power in zip(values, _unit_powers(m)):
        if c:
            for k, x in enumerate(power):
                out[k] += c * x
    return CyclicKRingElt(m, tuple(out))


@lru_cache(maxsize=64)
def _unit_powers(m: int) -> Tuple[Tuple[int, ...], ...]:
    """Reduced (1+mu)^i for i = 0..m-1, each step one multiplication by 1+mu"""
    unit = cyclic_reduce(MU + 1, m)
    powers = [cyclic_reduce(IntPoly.constant(1), m)]
    for _ in range(1, m):
        powers.append(powers[-1] * unit)
    return tuple(p.coeffs for p in powers)


def restriction_image(
    n: int,
    elem: str,
    target: RestrictionTarget = RestrictionTarget.ROTATION,
    swap_eta: bool = False,
) -> CyclicKRingElt:
    """Image of a named generator (v, v1, v2, v3, phi) in K(BZ_n) or K(BZ_2)"""
    ring = DihedralRingSpec(n, swap_eta)
    images = lift_map(ring)
    if elem not in images:
        raise UnknownGeneratorError(elem, tuple(images))
    return k_image(images[elem], target)


def alternating_series_image(m: int) -> CyclicKRingElt:
    """mu^2 - mu^3 + mu^4 - ... = mu^2 (1+mu)^(-1), with (1+mu)^(-1) = (1+mu)^(m-1)"""
    return cyclic_reduce(MU * MU * (MU + 1) ** (m - 1), m)
