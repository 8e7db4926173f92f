"""
Audit Reports
=============
Report schema shared by the CLI and the HTTP service, builders for every
command, and text / JSON / CSV renderers.

Sweeps over n fan out to a process pool; results are collected in input
order so output never depends on the worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field
from sympy import primerange

from .ahss import audit_filtrations, cohomology_table
from .config import settings
from .exactalg import describe_summands, poly_compose
from .kring import Grading, RelationCheck, k_image, restriction_image, verify_presentation
from .polyzoo import (
    MINUS2_PATTERN,
    adams_psi,
    chebyshev_sqrt_defect,
    eisenstein_check,
    f_at_minus2,
    f_min,
    named_poly,
    shifted_chebyshev,
    wf_identity_defect,
)
from .reptheory import (
    DihedralRingSpec,
    RestrictionTarget,
    cyclic_group_ring_mul,
    mul,
    random_element,
    restrict,
    verify_mul_by_characters,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")


# =============================================================================
# SCHEMA
# =============================================================================

class Status(str, Enum):
    OK = "ok"
    DEFECT = "defect"
    MISMATCH = "mismatch"
    UNVERIFIED = "unverified"
    INFO = "info"


FAILING = (Status.DEFECT, Status.MISMATCH)


class ResultRecord(BaseModel):
    n: Optional[int] = None
    item: str
    status: Status
    defect: Optional[List[int]] = None
    basis: Optional[List[str]] = None
    coeffs: Optional[List[int]] = None
    detail: Optional[str] = None


class Report(BaseModel):
    schema_version: int = Field(default_factory=lambda: settings.SCHEMA_VERSION)
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    results: List[ResultRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(r.status in FAILING for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


# =============================================================================
# SWEEPS
# =============================================================================

def run_sweep(func: Callable[[int], T], items: Sequence[int], jobs: int = 1) -> List[T]:
    """Map func over items, in order, optionally across worker processes"""
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


def _flatten(chunks: Iterable[List[ResultRecord]]) -> List[ResultRecord]:
    return [record for chunk in chunks for record in chunk]


# =============================================================================
# VERIFY
# =============================================================================

def _check_record(n: int, check: RelationCheck, suffix: str = "") -> ResultRecord:
    if check.exact:
        return ResultRecord(n=n, item=check.label + suffix, status=Status.OK, detail=check.expression)
    return ResultRecord(
        n=n,
        item=check.label + suffix,
        status=Status.DEFECT,
        defect=list(check.defect.coeffs),
        basis=list(check.defect.ring.basis),
        detail=f"defect {check.reduced} = {check.defect}",
    )


def verify_records(n: int, swap_eta: bool = False) -> List[ResultRecord]:
    verdict = verify_presentation(n, swap_eta)
    records = [_check_record(n, check) for check in verdict.checks]
    if verdict.retry is not None:
        retry = verdict.retry
        records.extend(_check_record(n, check, " [swapped eta]") for check in retry.failures)
        records.append(
            ResultRecord(
                n=n,
                item="swapped eta labeling",
                status=Status.INFO,
                detail="all exact" if retry.passed else f"{len(retry.failures)} defect(s) persist",
            )
        )
    return records


def verify_report(ns: Sequence[int], swap_eta: bool = False, jobs: int = 1) -> Report:
    chunks = run_sweep(partial(verify_records, swap_eta=swap_eta), list(ns), jobs)
    params = {"n": list(ns), "swap_eta": swap_eta}
    return Report(command="verify", params=params, results=_flatten(chunks))


# =============================================================================
# POLYNOMIALS, TABLES, RESTRICTIONS
# =============================================================================

def poly_report(kind: str, index: int) -> Report:
    p = named_poly(kind, index)
    record = ResultRecord(item=f"{kind} {index}", status=Status.OK, coeffs=list(p.coeffs), detail=str(p))
    return Report(command="poly", params={"kind": kind, "index": index}, results=[record])


def cohomology_report(n: int, pmax: int) -> Report:
    table = cohomology_table(n, pmax)
    records = [
        ResultRecord(n=n, item=str(entry.p), status=Status.INFO, detail=entry.describe())
        for entry in table.entries
    ]
    return Report(command="table", params={"table": "cohomology", "n": n, "pmax": pmax}, results=records)


def restrict_report(n: int, elem: str, target: RestrictionTarget, swap_eta: bool = False) -> Report:
    target = RestrictionTarget(target)
    image = restriction_image(n, elem, target, swap_eta)
    record = ResultRecord(
        n=n,
        item=f"{elem} -> {target.value}",
        status=Status.OK,
        coeffs=list(image.coeffs),
        basis=[f"mu^{i}" for i in range(image.m)],
        detail=str(image),
    )
    params = {"n": n, "elem": elem, "target": target.value, "swap_eta": swap_eta}
    return Report(command="restrict", params=params, results=[record])


# =============================================================================
# FILTRATION AUDIT
# =============================================================================

def audit_report(n: int, depth: int, grading: Grading = Grading.TWISTED) -> Report:
    audit = audit_filtrations(n, depth, grading)
    records = []
    for row in audit.rows:
        entry = row.entry
        if row.match is None:
            status = Status.UNVERIFIED
        else:
            status = Status.OK if row.match else Status.MISMATCH
        parts = [f"gr={row.graded}", f"|gr|={row.graded_order}", f"E_2={describe_summands(entry.e2)}"]
        if entry.claimed is not None:
            parts.append(f"E_inf={describe_summands(entry.claimed)}")
        if entry.generators:
            parts.append("generators " + ", ".join(entry.generators))
        if entry.note:
            parts.append(entry.note)
        records.append(ResultRecord(n=n, item=f"degree {row.degree}", status=status, detail="; ".join(parts)))
    records.append(
        ResultRecord(
            n=n,
            item="tower",
            status=Status.OK if audit.tower_consistent else Status.MISMATCH,
            detail="|Q_j| = |gr_j| * |Q_(j-1)|",
        )
    )
    params = {"n": n, "depth": depth, "grading": Grading(grading).value}
    return Report(command="audit", params=params, results=records)


# =============================================================================
# POLYNOMIAL IDENTITIES
# =============================================================================

def _identity_record(item: str, failures: List[Any], checked: int) -> ResultRecord:
    if failures:
        shown = ", ".join(str(f) for f in failures[:5])
        return ResultRecord(item=item, status=Status.DEFECT, detail=f"fails at {shown}")
    return ResultRecord(item=item, status=Status.OK, detail=f"{checked} cases exact")


def identities_report(n_max: int = 199, i_max: int = 200, ab_max: int = 12) -> Report:
    odd_ns = list(range(3, n_max + 1, 2))
    records = [
        _identity_record(
            "psi^i = shifted chebyshev",
            [i for i in range(1, i_max + 1) if adams_psi(i) != shifted_chebyshev(i)],
            i_max,
        ),
        _identity_record(
            "psi^a o psi^b = psi^ab",
            [
                (a, b)
                for a in range(1, ab_max + 1)
                for b in range(1, ab_max + 1)
                if poly_compose(adams_psi(a), adams_psi(b)) != adams_psi(a * b)
            ],
            ab_max * ab_max,
        ),
        _identity_record(
            "w*f_n = psi^(k+1) - psi^k",
            [n for n in odd_ns if not wf_identity_defect(n).is_zero()],
            len(odd_ns),
        ),
        _identity_record(
            "w*f_n^2 = shifted chebyshev_n",
            [n for n in odd_ns if not chebyshev_sqrt_defect(n).is_zero()],
            len(odd_ns),
        ),
        _identity_record(
            "f_n(-2) = sin(k*pi/2) + cos(k*pi/2)",
            [n for n in odd_ns if f_at_minus2(n) != MINUS2_PATTERN[(n // 2) % 4]],
            len(odd_ns),
        ),
    ]
    primes = [int(p) for p in primerange(3, n_max + 1)]
    records.append(
        _identity_record(
            "eisenstein f_p at p",
            [p for p in primes if not eisenstein_check(f_min(p), p)],
            len(primes),
        )
    )
    params = {"n_max": n_max, "i_max": i_max, "ab_max": ab_max}
    return Report(command="identities", params=params, results=records)


# =============================================================================
# DUAL ORACLE
# =============================================================================

def oracle_records(n: int, samples: int, seed: int, bound: int) -> List[ResultRecord]:
    """Random-sample checks of the product against characters, associativity and restriction"""
    ring = DihedralRingSpec(n)
    rng = np.random.default_rng([seed, n])
    targets = list(RestrictionTarget)
    failures: Dict[str, int] = {
        "characters": 0, "commutative": 0, "associative": 0, "dimension": 0, "restriction": 0,
    }
    for _ in range(samples):
        a, b, c = (random_element(ring, rng, bound) for _ in range(3))
        ab = mul(a, b)
        if not verify_mul_by_characters(a, b):
            failures["characters"] += 1
        if ab != mul(b, a):
            failures["commutative"] += 1
        if mul(ab, c) != mul(a, mul(b, c)):
            failures["associative"] += 1
        if ab.dimension != a.dimension * b.dimension:
            failures["dimension"] += 1
        for target in targets:
            if restrict(ab, target) != cyclic_group_ring_mul(restrict(a, target), restrict(b, target)):
                failures["restriction"] += 1
            if k_image(ab, target) != k_image(a, target) * k_image(b, target):
                failures["restriction"] += 1
    records = []
    for check, count in failures.items():
        status = Status.MISMATCH if count else Status.OK
        records.append(ResultRecord(n=n, item=check, status=status, detail=f"{count}/{samples} failures"))
    return records


def oracle_report(
    ns: Sequence[int],
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    bound: Optional[int] = None,
    jobs: int = 1,
) -> Report:
    samples = samples or settings.ORACLE_SAMPLES
    seed = settings.ORACLE_SEED if seed is None else seed
    bound = bound or settings.ORACLE_COEFF_BOUND
    worker = partial(oracle_records, samples=samples, seed=seed, bound=bound)
    chunks = run_sweep(worker, list(ns), jobs)
    params = {"n": list(ns), "samples": samples, "seed": seed, "bound": bound}
    return Report(command="oracle", params=params, results=_flatten(chunks))


# =============================================================================
# RENDERING
# =============================================================================

def _coefficient_line(record: ResultRecord) -> str:
    coeffs = record.coeffs or []
    if not any(coeffs):
        return "0"
    return " ".join(str(c) for c in coeffs)


def render_text(report: Report) -> str:
    if report.command in ("poly", "restrict"):
        return "\n".join(_coefficient_line(r) for r in report.results)
    if report.command == "table":
        return "\n".join(f"{r.item} ↦ {r.detail}" for r in report.results)
    if not report.results:
        return ""

    frame = pd.DataFrame(
        [
            {
                "n": "" if r.n is None else str(r.n),
                "item": r.item,
                "status": r.status.value,
                "detail": r.detail or "",
            }
            for r in report.results
        ]
    )
    if not frame["n"].any():
        frame = frame.drop(columns=["n"])
    return frame.to_string(index=False, justify="left")


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2, exclude_none=True)


def parse_json(text: str) -> Report:
    return Report.model_validate_json(text)


def render_csv(report: Report) -> str:
    rows = []
    for r in report.results:
        row = r.model_dump(mode="json")
        for key in ("defect", "basis", "coeffs"):
            if row[key] is not None:
                row[key] = " ".join(str(x) for x in row[key])
        rows.append(row)
    frame = pd.DataFrame(rows, columns=list(ResultRecord.model_fields))
    frame = frame.dropna(axis=1, how="all")
    return frame.to_csv(index=False)


RENDERERS = {
    "text": render_text,
    "json": render_json,
    "csv": render_csv,
}


def render(report: Report, fmt: str = "text") -> str:
    return RENDERERS[fmt](report)
