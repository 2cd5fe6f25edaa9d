"""Named verdicts for identity and inequality checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

REL_TOL = 1e-12


def check_tolerance(lhs: float, rhs: float, scale: float = REL_TOL) -> float:
    return scale * max(1.0, abs(lhs), abs(rhs))


@dataclass(frozen=True)
class CheckResult:
    """One inequality or identity verdict.

    slack = rhs - lhs; holds means lhs <= rhs + tol with tol scaled by the
    magnitudes involved.  When applicable is False the check's preconditions
    fail (e.g. a monotone-only bound on a non-monotone function) and holds
    carries no information.
    """

    name: str
    lhs: float
    rhs: float
    holds: bool
    slack: float
    applicable: bool = True
    notes: str = ""


def make_check(name: str, lhs: float, rhs: float, notes: str = "",
               scale: float = REL_TOL) -> CheckResult:
    tol = check_tolerance(lhs, rhs, scale)
    return CheckResult(
        name=name,
        lhs=lhs,
        rhs=rhs,
        holds=bool(lhs <= rhs + tol),
        slack=rhs - lhs,
        notes=notes,
    )


def inapplicable(name: str, notes: str) -> CheckResult:
    nan = math.nan
    return CheckResult(name=name, lhs=nan, rhs=nan, holds=True, slack=nan,
                       applicable=False, notes=notes)
