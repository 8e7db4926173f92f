"""
HTTP Service
============
Read-only FastAPI surface over the same reports the CLI prints.
"""

import logging
from datetime import datetime

from fastapi import FastAPI, Query, Request, status
from fastapi.responses import JSONResponse

from .config import settings
from .errors import DihedralError, GuardExceededError
from .kring import Grading
from .polyzoo import POLY_KINDS
from .reports import (
    Report,
    audit_report,
    cohomology_report,
    identities_report,
    poly_report,
    restrict_report,
    verify_report,
)
from .reptheory import RestrictionTarget

logger = logging.getLogger(__name__)

app = FastAPI(
    title=settings.APP_NAME,
    description="Exact audit of dihedral representation rings and K-ring presentations",
    version=settings.APP_VERSION,
)


# =============================================================================
# ERROR HANDLERS
# =============================================================================

@app.exception_handler(DihedralError)
async def dihedral_error_handler(request: Request, exc: DihedralError) -> JSONResponse:
    logger.warning(f"{type(exc).__name__} on {request.url.path}: {exc}")
    code = status.HTTP_422_UNPROCESSABLE_ENTITY if isinstance(exc, GuardExceededError) else status.HTTP_400_BAD_REQUEST
    return JSONResponse(
        status_code=code,
        content={
            "success": False,
            "error": {
                "message": str(exc),
                "type": type(exc).__name__,
                "timestamp": datetime.now().isoformat(),
            },
        },
    )


# =============================================================================
# ENDPOINTS
# =============================================================================

@app.get("/health")
async def health():
    return {
        "status": "healthy",
        "app": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "schema_version": settings.SCHEMA_VERSION,
        "timestamp": datetime.now().isoformat(),
    }


@app.get("/api/poly/{kind}/{index}", response_model=Report, response_model_exclude_none=True)
def get_poly(kind: str, index: int):
    return poly_report(kind, index)


@app.get("/api/poly")
def list_poly_kinds():
    return {"kinds": sorted(POLY_KINDS)}


@app.get("/api/verify/{n}", response_model=Report, response_model_exclude_none=True)
def get_verify(n: int, swap_eta: bool = False):
    return verify_report([n], swap_eta)


@app.get("/api/table/cohomology", response_model=Report, response_model_exclude_none=True)
def get_cohomology(n: int = Query(..., ge=3), pmax: int = Query(8, ge=0, le=400)):
    return cohomology_report(n, pmax)


@app.get("/api/restrict", response_model=Report, response_model_exclude_none=True)
def get_restrict(n: int, elem: str, target: RestrictionTarget = RestrictionTarget.ROTATION, swap_eta: bool = False):
    return restrict_report(n, elem, target, swap_eta)


@app.get("/api/audit", response_model=Report, response_model_exclude_none=True)
def get_audit(n: int, depth: int = Query(3, ge=1, le=12), grading: Grading = Grading.TWISTED):
    return audit_report(n, depth, grading)


@app.get("/api/identities", response_model=Report, response_model_exclude_none=True)
def get_identities(
    n_max: int = Query(49, ge=3, le=199),
    i_max: int = Query(50, ge=1, le=200),
    ab_max: int = Query(6, ge=1, le=12),
):
    return identities_report(n_max, i_max, ab_max)
