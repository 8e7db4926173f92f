"""
Cohomology and AHSS Filtrations
===============================
Integral cohomology of BD_2n, the E_2 page of the Atiyah-Hirzebruch spectral
sequence, the claimed E_infinity filtration quotients with their generators,
and the audit comparing those orders with the truncated K-ring quotients.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .errors import InvalidParameterError
from .exactalg import AbelianGroup, describe_summands
from .kring import Grading, build_presentation, monomial_label, truncated_quotient

logger = logging.getLogger(__name__)


# =============================================================================
# COHOMOLOGY
# =============================================================================

@dataclass(frozen=True)
class CohomologyEntry:
    """H^p(BD_2n; Z) with its summands in table order (0 = Z)"""
    p: int
    summands: Tuple[int, ...]

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup.from_summands(self.summands)

    def describe(self) -> str:
        return describe_summands(self.summands)


@dataclass(frozen=True)
class CohomologyTable:
    n: int
    pmax: int
    entries: Tuple[CohomologyEntry, ...]


def _require_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InvalidParameterError("n", n, "must be an integer >= 3")


def cohomology_summands(n: int, p: int) -> Tuple[int, ...]:
    _require_n(n)
    if p < 0:
        raise InvalidParameterError("p", p, "must be >= 0")
    if p == 0:
        return (0,)
    s, r = divmod(p, 4)
    if n % 2:
        if r == 0:
            return (n, 2)
        return (2,) if r == 2 else ()
    twos = {0: 2 * s, 1: 2 * s, 2: 2 * s + 2, 3: 2 * s + 1}[r]
    head = (n,) if r == 0 else ()
    return head + (2,) * twos


def cohomology(n: int, p: int) -> AbelianGroup:
    return AbelianGroup.from_summands(cohomology_summands(n, p))


def cohomology_table(n: int, pmax: int) -> CohomologyTable:
    if pmax < 0:
        raise InvalidParameterError("pmax", pmax, "must be >= 0")
    entries = tuple(CohomologyEntry(p, cohomology_summands(n, p)) for p in range(pmax + 1))
    return CohomologyTable(n, pmax, entries)


def e2_page(n: int, p: int, q: int) -> AbelianGroup:
    """E_2^{p,q} = H^p(BD_2n; K^q(pt)): H^p for even q, 0 for odd q"""
    if q > 0:
        raise InvalidParameterError("q", q, "must be <= 0")
    if q % 2:
        _require_n(n)
        return AbelianGroup.trivial()
    return cohomology(n, p)


# =============================================================================
# FILTRATIONS
# =============================================================================

class FiltrationStatus(str, Enum):
    COLLAPSED = "E_inf = E_2"
    CLAIMED = "E_inf claimed"
    UNVERIFIED = "E_2 known / E_inf unverified"


@dataclass(frozen=True)
class FiltrationEntry:
    degree: int
    e2: Tuple[int, ...]
    claimed: Optional[Tuple[int, ...]]
    generators: Tuple[str, ...]
    status: FiltrationStatus
    note: str = ""

    @property
    def claimed_order(self) -> Optional[int]:
        if self.claimed is None:
            return None
        return AbelianGroup.from_summands(self.claimed).order


@dataclass(frozen=True)
class FiltrationReport:
    n: int
    max_degree: int
    entries: Tuple[FiltrationEntry, ...]


def _odd_entry(n: int, degree: int) -> FiltrationEntry:
    j = degree // 2
    summands = cohomology_summands(n, degree)
    generators = [monomial_label(("v",), (j,))]
    note = ""
    if degree % 4 == 0:
        generators.append("(phi-v)" if j == 2 else f"(phi-v)^{j // 2}")
        note = "Z_n part generated by phi-v (twisting)"
    return FiltrationEntry(degree, summands, summands, tuple(generators), FiltrationStatus.COLLAPSED, note)


def _k2_entry(degree: int) -> FiltrationEntry:
    e2 = cohomology_summands(4, degree)
    gens = ("v1", "v2", "v3")
    if degree == 2:
        return FiltrationEntry(degree, e2, (2, 2), ("v1", "v2"), FiltrationStatus.CLAIMED)
    t, r = divmod(degree, 4)
    if r == 0:
        generators = (
            # Z_4 class named phi in every degree 4t
            "phi",
            monomial_label(gens, (1, 0, 2 * t - 1)),
            monomial_label(gens, (0, 1, 2 * t - 1)),
        )
        return FiltrationEntry(degree, e2, (4, 2, 2), generators, FiltrationStatus.CLAIMED)
    generators = (
        monomial_label(gens, (1, 0, 2 * t)),
        monomial_label(gens, (0, 1, 2 * t)),
        monomial_label(gens, (1, t, 0)),
    )
    note = "one Z_2 summand of E_2 does not survive" if len(e2) > 3 else ""
    return FiltrationEntry(degree, e2, (2, 2, 2), generators, FiltrationStatus.CLAIMED, note)


def filtration_report(n: int, max_degree: int) -> FiltrationReport:
    """Claimed E_infinity^{2j,-2j} quotients for 2 <= 2j <= max_degree"""
    _require_n(n)
    if max_degree < 2:
        raise InvalidParameterError("max_degree", max_degree, "must be >= 2")
    entries = []
    for degree in range(2, max_degree + 1, 2):
        if n % 2:
            entries.append(_odd_entry(n, degree))
        elif n == 4:
            entries.append(_k2_entry(degree))
        else:
            entries.append(
                FiltrationEntry(degree, cohomology_summands(n, degree), None, (), FiltrationStatus.UNVERIFIED)
            )
    return FiltrationReport(n, max_degree, tuple(entries))


# =============================================================================
# AUDIT
# =============================================================================

@dataclass(frozen=True)
class AuditRow:
    degree: int
    graded: AbelianGroup
    expected_order: Optional[int]
    entry: FiltrationEntry

    @property
    def graded_order(self) -> Optional[int]:
        return self.graded.order

    @property
    def match(self) -> Optional[bool]:
        """None when there is no claim to compare against"""
        if self.expected_order is None:
            return None
        return self.graded_order == self.expected_order


@dataclass(frozen=True)
class FiltrationAudit:
    n: int
    depth: int
    grading: Grading
    rows: Tuple[AuditRow, ...]
    tower_consistent: bool

    @property
    def passed(self) -> bool:
        return self.tower_consistent and all(row.match is not False for row in self.rows)


def audit_filtrations(n: int, depth: int, grading: Grading = Grading.TWISTED) -> FiltrationAudit:
    """Compare |gr_j| from the truncated quotients with the E_infinity order at degree 2j"""
    if depth < 1:
        raise InvalidParameterError("depth", depth, "must be >= 1")
    report = filtration_report(n, 2 * depth)
    tower = truncated_quotient(build_presentation(n), depth, grading)
    rows = tuple(
        AuditRow(entry.degree, gr, entry.claimed_order, entry)
        for entry, gr in zip(report.entries, tower.graded)
    )
    for row in rows:
        if row.match is False:
            logger.warning(
                f"n={n} degree {row.degree}: |gr| = {row.graded_order}, expected {row.expected_order}"
            )
    return FiltrationAudit(n, depth, Grading(grading), rows, tower.consistent())
