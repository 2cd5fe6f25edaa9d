"""Inequality harness: every bound gets a named verdict with explicit slack.

The monotone-only bounds (total-influence, square-sum, the conditional
deviation bounds in their pivotal form, the second-order summed bound) mark
themselves inapplicable on non-monotone input instead of failing.  The
exponential deviation bounds in character form apply to arbitrary Boolean
functions.  Tail machinery for the centered sum S_n lives here too, both the
sub-Gaussian bound and the exact binomial tail it dominates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, logsumexp

from .core import BooleanFunction, PivotalError, is_monotone
from .influence import (
    conditional_pivotal_probs,
    conditional_stats,
    second_order,
    total_influence,
)
from .measure import (
    check_open_bias,
    expectation,
    mean_derivative,
    probabilities,
)
from .results import CheckResult, check_tolerance, inapplicable, make_check


def _prob_one(f: BooleanFunction, p: float) -> float:
    return float(probabilities(f.n, p)[f.table == 1].sum())


def check_theorem1(f: BooleanFunction, p: float) -> CheckResult:
    """E|P(f)| <= sqrt(n E(f) / (p(1-p))) for monotone f."""
    check_open_bias(p)
    if not is_monotone(f):
        return inapplicable("theorem1", "requires a monotone function")
    lhs = total_influence(f, p).total
    rhs = math.sqrt(f.n * expectation(f, p) / (p * (1.0 - p)))
    return make_check("theorem1", lhs, rhs)


def check_bessel(f: BooleanFunction, p: float) -> CheckResult:
    """sum_i Inf_i^2 <= E(f) / (p(1-p)), plus the Cauchy-Schwarz chain back
    to the total-influence bound."""
    check_open_bias(p)
    if not is_monotone(f):
        return inapplicable("bessel", "requires a monotone function")
    profile = total_influence(f, p)
    lhs = sum(v * v for v in profile.per_coord)
    rhs = expectation(f, p) / (p * (1.0 - p))
    chain_rhs = math.sqrt(f.n * lhs)
    chain_ok = profile.total <= chain_rhs + check_tolerance(profile.total, chain_rhs)
    primary = make_check("bessel", lhs, rhs,
                         notes=f"chain total={profile.total:.6g} <= "
                               f"sqrt(n*lhs)={chain_rhs:.6g}")
    if not chain_ok:
        return CheckResult(name=primary.name, lhs=primary.lhs, rhs=primary.rhs,
                           holds=False, slack=primary.slack,
                           notes=primary.notes + "; chain violated")
    return primary


def check_margulis_russo(f: BooleanFunction, p: float) -> CheckResult:
    """d/dp E(f) = E|P(f)| for monotone f, as a two-sided equality at 1e-9
    relative tolerance."""
    check_open_bias(p)
    if not is_monotone(f):
        return inapplicable("margulis-russo", "requires a monotone function")
    lhs = mean_derivative(f, p)
    rhs = total_influence(f, p).total
    tol = 1e-9 * max(1.0, abs(rhs))
    holds = abs(lhs - rhs) <= tol
    return CheckResult(name="margulis-russo", lhs=lhs, rhs=rhs, holds=bool(holds),
                       slack=rhs - lhs,
                       notes=f"one-sided gaps {lhs - rhs:.3g} and {rhs - lhs:.3g}, "
                             f"tol {tol:.3g}")


def hoeffding_bound(n: int, p: float, u: float, variant: str = "stated") -> float:
    """Sub-Gaussian tail bound for P(|S_n| >= u).

    stated: 2 exp(-2 p^2 (1-p)^2 u^2 / n); proved: the weaker exponent with
    the 2 in the denominator, 2 exp(-p^2 (1-p)^2 u^2 / (2n)).
    """
    check_open_bias(p)
    if u <= 0:
        raise PivotalError("deviation level u must be positive")
    c = (p * (1.0 - p)) ** 2 * u * u / n
    if variant == "stated":
        return 2.0 * math.exp(-2.0 * c)
    if variant == "proved":
        return 2.0 * math.exp(-c / 2.0)
    raise PivotalError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class TailPoint:
    n: int
    p: float
    u: float
    exact: float
    bound: float


def exact_tail(n: int, p: float, u: float) -> TailPoint:
    """Exact P(|S_n| >= u) by log-domain binomial summation.

    S_n = (K - n p) / (p (1-p)) with K binomial(n, p), so the event is
    |K - n p| >= u p (1-p).
    """
    check_open_bias(p)
    if u <= 0:
        raise PivotalError("deviation level u must be positive")
    if n > 10**6:
        raise PivotalError("n too large for exact binomial summation")
    threshold = u * p * (1.0 - p)
    k = np.arange(n + 1, dtype=np.float64)
    mask = np.abs(k - n * p) >= threshold
    if not mask.any():
        exact = 0.0
    else:
        logs = (gammaln(n + 1) - gammaln(k[mask] + 1) - gammaln(n - k[mask] + 1)
                + k[mask] * math.log(p) + (n - k[mask]) * math.log1p(-p))
        exact = float(min(1.0, math.exp(logsumexp(logs))))
    return TailPoint(n=n, p=p, u=u, exact=exact,
                     bound=hoeffding_bound(n, p, u, "stated"))


def check_bth(f: BooleanFunction, p: float) -> CheckResult:
    """P(f=1) <= 2 exp(-(p(1-p) E(S_n|f=1))^2 / (2n)); any Boolean f."""
    stats = conditional_stats(f, p)
    lhs = stats.prob_one
    exponent = -((p * (1.0 - p) * stats.cond_sn) ** 2) / (2.0 * f.n)
    rhs = 2.0 * math.exp(exponent)
    return make_check("bth", lhs, rhs, notes=_capped_note(rhs))


def check_imme(f: BooleanFunction, p: float) -> CheckResult:
    """P(f=1) <= 2 exp(-((1-p) E(|P(f)| | f=1))^2 / (2n)); monotone f."""
    if not is_monotone(f):
        return inapplicable("imme", "requires a monotone function")
    stats = conditional_stats(f, p)
    lhs = stats.prob_one
    exponent = -(((1.0 - p) * stats.cond_pivotal) ** 2) / (2.0 * f.n)
    rhs = 2.0 * math.exp(exponent)
    return make_check("imme", lhs, rhs, notes=_capped_note(rhs))


def check_rth(f: BooleanFunction, p: float) -> CheckResult:
    """P(f=1) <= 2 exp(-(1/2) sum_i (p(1-p) E(X_i f|f=1))^2); any Boolean f.

    Also verifies the Cauchy-Schwarz ordering against the aggregated bound:
    this bound is never weaker than the one from E(S_n|f=1).
    """
    stats = conditional_stats(f, p)
    lhs = stats.prob_one
    q = p * (1.0 - p)
    square_sum = sum((q * c) ** 2 for c in stats.cond_xi)
    rhs = 2.0 * math.exp(-0.5 * square_sum)
    bth_rhs = 2.0 * math.exp(-((q * stats.cond_sn) ** 2) / (2.0 * f.n))
    ordered = rhs <= bth_rhs + check_tolerance(rhs, bth_rhs)
    note = _capped_note(rhs) + f"; bth rhs {bth_rhs:.6g}"
    result = make_check("rth", lhs, rhs, notes=note)
    if not ordered:
        return CheckResult(name=result.name, lhs=result.lhs, rhs=result.rhs,
                           holds=False, slack=result.slack,
                           notes=note + "; ordering vs bth violated")
    return result


def check_crth(f: BooleanFunction, p: float) -> CheckResult:
    """P(f=1) <= 2 exp(-(1/2) sum_i ((1-p) P(i in P(f)|f=1))^2); monotone f."""
    if not is_monotone(f):
        return inapplicable("crth", "requires a monotone function")
    check_open_bias(p)
    lhs = _prob_one(f, p)
    if lhs == 0.0:
        raise PivotalError("conditioning on {f=1} with P(f=1) = 0")
    cond = conditional_pivotal_probs(f, p)
    square_sum = sum(((1.0 - p) * c) ** 2 for c in cond)
    rhs = 2.0 * math.exp(-0.5 * square_sum)
    return make_check("crth", lhs, rhs, notes=_capped_note(rhs))


def check_talag_explicit(f: BooleanFunction, p: float) -> CheckResult:
    """First-order correlation bound with explicit constant:
    sum_i E(X_i f)^2 <= (2 P(f=1)^2 / (p(1-p))^2) ln(2 / P(f=1))."""
    check_open_bias(p)
    mu = _prob_one(f, p)
    if mu == 0.0 or mu == 1.0:
        return CheckResult(name="talag-explicit", lhs=0.0, rhs=0.0, holds=True,
                           slack=0.0, applicable=False,
                           notes=f"P(f=1)={mu:g}: correlations vanish, trivial")
    stats = conditional_stats(f, p)
    lhs = sum((c * mu) ** 2 for c in stats.cond_xi)
    q2 = (p * (1.0 - p)) ** 2
    rhs = (2.0 * mu * mu / q2) * math.log(2.0 / mu)
    # implied universal constant under the ln(e/mu) normalization, at p=1/2
    implied = (2.0 / q2) * math.log(2.0 / mu) / math.log(math.e / mu)
    return make_check("talag-explicit", lhs, rhs,
                      notes=f"implied K (ln(e/mu) form) = {implied:.6g}")


def _stagi_term(inf_k: float) -> float:
    # continuous extension: x^2 ln(2/x) -> 0 as x -> 0, = ln 2 at x = 1
    if inf_k <= 0.0:
        return 0.0
    return inf_k * inf_k * math.log(2.0 / inf_k)


def check_stagi(f: BooleanFunction, p: float) -> CheckResult:
    """Summed second-order bound:
    sum_{i != k} E(X_i X_k f)^2 <= c(p) sum_k Inf_k^2 ln(2/Inf_k)
    with c(p) = 2 / (p(1-p))^2; monotone f."""
    if not is_monotone(f):
        return inapplicable("stagi", "requires a monotone function")
    check_open_bias(p)
    lhs = second_order(f, p).off_diagonal_square_sum()
    profile = total_influence(f, p)
    c_p = 2.0 / (p * (1.0 - p)) ** 2
    rhs = c_p * sum(_stagi_term(v) for v in profile.per_coord)
    return make_check("stagi", lhs, rhs)


def _capped_note(rhs: float) -> str:
    return f"min(1, rhs) = {min(1.0, rhs):.6g}"


# ---------------------------------------------------------------------------
# Report-only scan for the uniform-measure second-order constant


@dataclass(frozen=True)
class EtalagRow:
    constant: float
    rhs: float
    passes: bool


@dataclass(frozen=True)
class EtalagReport:
    lhs: float
    weight: float  # sum of squared influences at p = 1/2
    rows: tuple[EtalagRow, ...]
    minimal_passing: float | None
    note: str


DEFAULT_K_GRID = (1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0)


def etalag_scan(f: BooleanFunction, k_grid=DEFAULT_K_GRID) -> EtalagReport:
    """Grid scan of sum_{i != k} E(f X_i X_k)^2 <= K W ln(K/W) at p = 1/2,
    W = sum_k Inf_k^2.  Informational only: the universal constant carries
    no explicit value, so no verdict is attached."""
    if not is_monotone(f):
        raise PivotalError("the second-order scan expects a monotone function")
    p = 0.5
    profile = total_influence(f, p)
    weight = sum(v * v for v in profile.per_coord)
    if weight == 0.0:
        return EtalagReport(lhs=0.0, weight=0.0, rows=(), minimal_passing=None,
                            note="all influences vanish: scan skipped")
    lhs = second_order(f, p).off_diagonal_square_sum()
    rows = []
    minimal = None
    for k in sorted(k_grid):
        rhs = k * weight * math.log(k / weight)
        passes = lhs <= rhs + check_tolerance(lhs, rhs)
        rows.append(EtalagRow(constant=float(k), rhs=rhs, passes=passes))
        if passes and minimal is None:
            minimal = float(k)
    return EtalagReport(lhs=lhs, weight=weight, rows=tuple(rows),
                        minimal_passing=minimal, note="report only")


# ---------------------------------------------------------------------------
# Majority at p = 1/2


def majority_influence_exact(n: int) -> float:
    """Influence of one vote in an odd-n majority at p = 1/2:
    C(n-1, (n-1)/2) / 2^(n-1), via log-gamma."""
    if n < 1 or n % 2 == 0:
        raise PivotalError(f"majority influence needs odd n, got {n}")
    if n == 1:
        return 1.0
    m = (n - 1) // 2
    return math.exp(gammaln(n) - 2.0 * gammaln(m + 1) - (n - 1) * math.log(2.0))


def check_majority_asymptotic(n: int) -> CheckResult:
    """Exact single-vote influence of majority(n) at p = 1/2 against the
    1/sqrt(n/4) bound, with the sqrt(2/(pi n)) asymptotic checked at 2%
    relative for n >= 101."""
    if n % 2 == 0:
        raise PivotalError(f"majority is defined for odd n only, got {n}")
    if not 3 <= n <= 10**5:
        raise PivotalError("n out of supported range 3..100000")
    exact = majority_influence_exact(n)
    bound = 1.0 / math.sqrt(n * 0.25)
    asym = math.sqrt(2.0 / (math.pi * n))
    ratio = exact / asym
    holds = exact <= bound + check_tolerance(exact, bound)
    note = f"asymptotic sqrt(2/(pi n)) = {asym:.6g}, ratio {ratio:.6g}"
    if n >= 101:
        within = abs(ratio - 1.0) <= 0.02
        holds = holds and within
        note += "; within 2%" if within else "; outside 2%"
    return CheckResult(name="majority-asymptotic", lhs=exact, rhs=bound,
                       holds=bool(holds), slack=bound - exact, notes=note)


# ---------------------------------------------------------------------------
# Suite driver

SUITE_CHECKS = (
    ("theorem1", check_theorem1),
    ("bessel", check_bessel),
    ("margulis-russo", check_margulis_russo),
    ("bth", check_bth),
    ("rth", check_rth),
    ("imme", check_imme),
    ("crth", check_crth),
    ("talag-explicit", check_talag_explicit),
    ("stagi", check_stagi),
)


def run_suite(f: BooleanFunction, p_grid) -> list[tuple[float, CheckResult]]:
    """Run every check at every grid point; checks whose preconditions fail
    are marked inapplicable rather than raised."""
    out = []
    for p in p_grid:
        for name, check in SUITE_CHECKS:
            try:
                result = check(f, p)
            except PivotalError as exc:
                result = inapplicable(name, str(exc))
            out.append((float(p), result))
    return out
