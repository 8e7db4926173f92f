"""
Error Types
===========
Domain exceptions raised across the toolkit. The CLI maps them to exit codes,
the HTTP service to JSON error envelopes.
"""

from typing import Any, Optional


class DihedralError(Exception):
    """Base class for all toolkit errors"""


class InvalidParameterError(DihedralError, ValueError):
    def __init__(self, name: str, value: Any, requirement: str):
        self.name = name
        self.value = value
        self.requirement = requirement
        super().__init__(f"Invalid {name}={value!r}: {requirement}")


class InexactDivisionError(DihedralError, ArithmeticError):
    def __init__(self, what: str, numerator: int, denominator: int):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{what}: {numerator} is not divisible by {denominator}")


class RingMismatchError(DihedralError, ValueError):
    def __init__(self, left, right):
        super().__init__(f"Operands live in different rings: {left} vs {right}")


class UnknownGeneratorError(DihedralError, KeyError):
    def __init__(self, name: str, known: Optional[tuple] = None):
        self.generator = name
        detail = f"; known: {', '.join(known)}" if known else ""
        super().__init__(f"Unknown generator '{name}'{detail}")

    def __str__(self) -> str:
        return self.args[0]


class GuardExceededError(DihedralError):
    def __init__(self, count: int, limit: int, what: str = "monomials"):
        self.count = count
        self.limit = limit
        self.what = what
        super().__init__(
            f"Truncation needs {count} {what}, above the guard of {limit}; lower the depth"
        )


class ClaimViolationError(DihedralError):
    """An audited identity produced a value outside the claimed set"""

    def __init__(self, claim: str, value: Any):
        self.claim = claim
        self.value = value
        super().__init__(f"Claim '{claim}' fails: got {value}")
