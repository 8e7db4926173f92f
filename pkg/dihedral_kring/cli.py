"""
Command Line Interface
======================
    python -m dihedral_kring verify --from 3 --to 99 --odd
    python -m dihedral_kring poly psi 2
    python -m dihedral_kring table cohomology --n 3 --pmax 4
    python -m dihedral_kring restrict --n 4 --elem phi --target zn
    python -m dihedral_kring audit --n 4 --depth 3
    python -m dihedral_kring identities
    python -m dihedral_kring oracle --from 3 --to 50
    python -m dihedral_kring serve

Exit codes: 0 all audited claims hold, 1 an audited claim has a defect,
2 usage error.
"""

import argparse
import logging
import sys
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from .config import settings, setup_logging
from .errors import ClaimViolationError, DihedralError
from .kring import Grading
from .polyzoo import POLY_KINDS
from .reports import (
    Report,
    audit_report,
    cohomology_report,
    identities_report,
    oracle_report,
    poly_report,
    render,
    restrict_report,
    verify_report,
)
from .reptheory import RestrictionTarget

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DEFECT = 1
EXIT_USAGE = 2


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """Validated options shared by every subcommand"""
    subcommand: str
    ns: List[int] = Field(default_factory=list)
    depth: Optional[int] = Field(default=None, ge=1)
    fmt: OutputFormat = OutputFormat.TEXT
    swap_eta: bool = False
    jobs: int = Field(default=1, ge=1)

    @field_validator("ns")
    @classmethod
    def validate_ns(cls, v: List[int]) -> List[int]:
        for n in v:
            if n < 3:
                raise ValueError(f"n={n} is out of range; D_2n needs n >= 3")
        return v


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="Emit one JSON document")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="Emit CSV rows")
    common.add_argument("--swap-eta", action="store_true", help="Exchange the eta_1/eta_2 labeling")
    common.add_argument("--jobs", type=int, default=settings.MAX_WORKERS, help="Worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr (-vv for debug)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="dihedral_kring",
        description="Exact audit of the K-rings of classifying spaces of dihedral groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Lift every relation into R(D_2n)")
    verify.add_argument("n", nargs="?", type=int, help="Single n")
    verify.add_argument("--from", dest="start", type=int, help="First n of a sweep")
    verify.add_argument("--to", dest="stop", type=int, help="Last n of a sweep")
    parity = verify.add_mutually_exclusive_group()
    parity.add_argument("--odd", action="store_true", help="Only odd n")
    parity.add_argument("--even", action="store_true", help="Only even n")

    poly = sub.add_parser("poly", parents=[common], help="Print a named polynomial")
    poly.add_argument("kind", choices=sorted(POLY_KINDS))
    poly.add_argument("index", type=int)

    table = sub.add_parser("table", parents=[common], help="Print a cohomology table")
    table.add_argument("which", choices=["cohomology"])
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--pmax", type=int, default=8)

    restrict = sub.add_parser("restrict", parents=[common], help="Restriction image in a cyclic K-ring")
    restrict.add_argument("--n", type=int, required=True)
    restrict.add_argument("--elem", required=True, help="v, v1, v2, v3 or phi")
    restrict.add_argument("--target", choices=[t.value for t in RestrictionTarget], default="zn")

    audit = sub.add_parser("audit", parents=[common], help="Compare filtration orders with E_infinity")
    audit.add_argument("--n", type=int, required=True)
    audit.add_argument("--depth", type=int, default=3)
    audit.add_argument("--grading", choices=[g.value for g in Grading], default=Grading.TWISTED.value)

    identities = sub.add_parser("identities", parents=[common], help="Sweep the polynomial identities")
    identities.add_argument("--n-max", type=int, default=199)
    identities.add_argument("--i-max", type=int, default=200)
    identities.add_argument("--ab-max", type=int, default=12)

    oracle = sub.add_parser("oracle", parents=[common], help="Random dual-oracle product checks")
    oracle.add_argument("--from", dest="start", type=int, default=3)
    oracle.add_argument("--to", dest="stop", type=int, default=50)
    oracle.add_argument("--samples", type=int, default=settings.ORACLE_SAMPLES)
    oracle.add_argument("--seed", type=int, default=settings.ORACLE_SEED)

    serve = sub.add_parser("serve", parents=[common], help="Run the HTTP service")
    serve.add_argument("--host", default=settings.HOST)
    serve.add_argument("--port", type=int, default=settings.PORT)

    return parser


def _verify_range(args: argparse.Namespace) -> List[int]:
    if args.n is not None:
        if args.start is not None or args.stop is not None:
            raise ValueError("give either n or --from/--to, not both")
        return [args.n]
    if args.start is None or args.stop is None:
        raise ValueError("verify needs n or both --from and --to")
    ns = list(range(args.start, args.stop + 1))
    if args.odd:
        ns = [n for n in ns if n % 2]
    elif args.even:
        ns = [n for n in ns if n % 2 == 0]
    if not ns:
        raise ValueError(f"empty range {args.start}..{args.stop}")
    return ns


def _build_config(args: argparse.Namespace) -> RunConfig:
    ns: List[int] = []
    if args.command == "verify":
        ns = _verify_range(args)
    elif args.command == "oracle":
        ns = list(range(args.start, args.stop + 1))
        if not ns:
            raise ValueError(f"empty range {args.start}..{args.stop}")
    elif args.command in ("table", "restrict", "audit"):
        ns = [args.n]
    return RunConfig(
        subcommand=args.command,
        ns=ns,
        depth=getattr(args, "depth", None),
        fmt=args.fmt or OutputFormat.TEXT,
        swap_eta=args.swap_eta,
        jobs=args.jobs,
    )


def _dispatch(args: argparse.Namespace, config: RunConfig) -> Report:
    if config.subcommand == "verify":
        return verify_report(config.ns, config.swap_eta, config.jobs)
    if config.subcommand == "poly":
        return poly_report(args.kind, args.index)
    if config.subcommand == "table":
        return cohomology_report(args.n, args.pmax)
    if config.subcommand == "restrict":
        return restrict_report(args.n, args.elem, RestrictionTarget(args.target), config.swap_eta)
    if config.subcommand == "audit":
        return audit_report(args.n, config.depth, Grading(args.grading))
    if config.subcommand == "identities":
        return identities_report(args.n_max, args.i_max, args.ab_max)
    if config.subcommand == "oracle":
        return oracle_report(config.ns, args.samples, args.seed, jobs=config.jobs)
    raise ValueError(f"unknown command {config.subcommand}")


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    logger.info(f"Starting {settings.APP_NAME} on http://{args.host}:{args.port}")
    uvicorn.run("dihedral_kring.service:app", host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        setup_logging("DEBUG" if args.verbose > 1 else "INFO")
    else:
        setup_logging()

    try:
        config = _build_config(args)
        if config.subcommand == "serve":
            return _serve(args)
        report = _dispatch(args, config)
    except ClaimViolationError as e:
        print(f"claim violated: {e}", file=sys.stderr)
        return EXIT_DEFECT
    except (DihedralError, ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(report, config.fmt.value))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
