"""The biased Bernoulli product measure on the cube.

Every coordinate is 1 with probability p, independently.  This module holds
the probability weights, expectations, the centered characters X_i and their
sum S_n, the scalar product on real functions over the cube, and the weight
polynomial carrying E_p(f) with its exact derivative in p.

All exact paths require n <= MAX_EXACT_N.  Operations that divide by p or
1 - p (anything touching X_i or S_n) reject the endpoints.
"""

from __future__ import annotations

import numpy as np

from .core import (
    MAX_EXACT_N,
    BooleanFunction,
    PivotalError,
    check_coordinate,
    get_bit,
    hamming_weight,
    popcounts,
    weight_enumerator,
)
from .results import CheckResult, check_tolerance


def check_bias(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise PivotalError(f"bias p={p} outside [0, 1]")


def check_open_bias(p: float) -> None:
    check_bias(p)
    if p == 0.0 or p == 1.0:
        raise PivotalError(f"bias p={p} must lie strictly inside (0, 1)")


def _check_cap(n: int) -> None:
    if n > MAX_EXACT_N:
        raise PivotalError(f"arity {n} exceeds exact cap {MAX_EXACT_N}")


def prob(omega: int, n: int, p: float) -> float:
    """P(omega) = p^K (1-p)^(n-K) with K the Hamming weight of omega."""
    check_bias(p)
    k = hamming_weight(omega)
    return p**k * (1.0 - p) ** (n - k)


def probabilities(n: int, p: float) -> np.ndarray:
    """P(omega) for every configuration index, summing to 1."""
    check_bias(p)
    _check_cap(n)
    k = popcounts(n).astype(np.float64)
    if p == 0.0:
        out = np.where(k == 0, 1.0, 0.0)
    elif p == 1.0:
        out = np.where(k == n, 1.0, 0.0)
    else:
        out = np.exp(k * np.log(p) + (n - k) * np.log1p(-p))
    return out


def as_values(g, n: int | None = None) -> tuple[np.ndarray, int]:
    """Materialize a real function on the cube as (values, n)."""
    if isinstance(g, BooleanFunction):
        return g.values(), g.n
    if isinstance(g, np.ndarray):
        size = g.size
        m = size.bit_length() - 1
        if 1 << m != size:
            raise PivotalError("value array length must be a power of two")
        return g.astype(np.float64), m
    if callable(g):
        if n is None:
            raise PivotalError("callable cube functions need an explicit arity")
        _check_cap(n)
        return np.array([float(g(w)) for w in range(1 << n)]), n
    raise PivotalError(f"cannot interpret {type(g).__name__} as a cube function")


def expectation(g, p: float, n: int | None = None) -> float:
    """Exact E(g) under the product measure of parameter p."""
    values, n = as_values(g, n)
    return float(values @ probabilities(n, p))


def x_value(omega: int, i: int, p: float) -> float:
    """The centered character: 1/p when omega(i)=1, -1/(1-p) when omega(i)=0."""
    check_open_bias(p)
    return 1.0 / p if get_bit(omega, i) else -1.0 / (1.0 - p)


def x_values(n: int, i: int, p: float) -> np.ndarray:
    check_open_bias(p)
    check_coordinate(i, n)
    _check_cap(n)
    bit = ((np.arange(1 << n) >> (i - 1)) & 1).astype(np.float64)
    return bit / p - (1.0 - bit) / (1.0 - p)


def s_n(omega: int, n: int, p: float) -> float:
    """X_1 + ... + X_n at omega, i.e. (K - n p) / (p (1-p))."""
    check_open_bias(p)
    k = hamming_weight(omega)
    return (k - n * p) / (p * (1.0 - p))


def s_n_values(n: int, p: float) -> np.ndarray:
    check_open_bias(p)
    _check_cap(n)
    k = popcounts(n).astype(np.float64)
    return (k - n * p) / (p * (1.0 - p))


def inner_product(g, h, p: float, n: int | None = None) -> float:
    """<g, h> = sum_omega g(omega) h(omega) P(omega)."""
    gv, gn = as_values(g, n)
    hv, hn = as_values(h, n)
    if gn != hn:
        raise PivotalError(f"arity mismatch: {gn} vs {hn}")
    return float((gv * hv) @ probabilities(gn, p))


# ---------------------------------------------------------------------------
# The weight polynomial E_p(f) = sum_k a_k p^k (1-p)^(n-k)


def mean_poly(f: BooleanFunction) -> tuple[int, ...]:
    """Weight-enumerator coefficients a_0..a_n of E_p(f)."""
    return weight_enumerator(f)


def mean_from_weights(weights, p: float) -> float:
    check_bias(p)
    n = len(weights) - 1
    total = 0.0
    for k, a in enumerate(weights):
        if a:
            total += a * p**k * (1.0 - p) ** (n - k)
    return total


def mean_derivative_from_weights(weights, p: float) -> float:
    check_open_bias(p)
    n = len(weights) - 1
    total = 0.0
    for k, a in enumerate(weights):
        if not a:
            continue
        if k > 0:
            total += a * k * p ** (k - 1) * (1.0 - p) ** (n - k)
        if n - k > 0:
            total -= a * (n - k) * p**k * (1.0 - p) ** (n - k - 1)
    return total


def mean_derivative(f: BooleanFunction, p: float) -> float:
    """Analytic d/dp E_p(f), from the weight polynomial."""
    return mean_derivative_from_weights(weight_enumerator(f), p)


# ---------------------------------------------------------------------------
# Shift identities for the biased measure


def verify_trick_identity(f, i: int, p: float, n: int | None = None) -> CheckResult:
    """Check the coordinate-shift identities
    E(f * omega(i)) = p * E(f(omega with i set)) and
    E(f * (1 - omega(i))) = (1-p) * E(f(omega with i cleared)),
    plus the one-dimensional difference formula when n = 1 and p is interior.
    """
    values, n = as_values(f, n)
    check_coordinate(i, n)
    weights = probabilities(n, p)
    idx = np.arange(1 << n)
    bit = ((idx >> (i - 1)) & 1).astype(np.float64)
    hi = values[idx | (1 << (i - 1))]
    lo = values[idx & ~(1 << (i - 1))]

    pairs = [
        ("set-shift", float((values * bit) @ weights), float(p * (hi @ weights))),
        ("clear-shift", float((values * (1.0 - bit)) @ weights),
         float((1.0 - p) * (lo @ weights))),
    ]
    if n == 1 and 0.0 < p < 1.0:
        pairs.append(
            ("difference", float(values[1] - values[0]),
             float((values * x_values(1, 1, p)) @ weights))
        )

    residual = 0.0
    allowed = 0.0
    notes = []
    ok = True
    for label, lhs, rhs in pairs:
        gap = abs(lhs - rhs)
        tol = check_tolerance(lhs, rhs)
        ok = ok and gap <= tol
        residual = max(residual, gap)
        allowed = max(allowed, tol)
        notes.append(f"{label}: lhs={lhs:.6g} rhs={rhs:.6g}")
    return CheckResult(name="trick-identity", lhs=residual, rhs=allowed,
                       holds=bool(ok), slack=allowed - residual,
                       notes="; ".join(notes))
