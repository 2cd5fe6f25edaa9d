"""Influence and pivotal-set statistics under the biased measure.

Influence here is the unsigned quantity P(i is pivotal); the signed
correlation E(f X_i) is a separate operation because the two coincide only
for monotone functions.  Conditional quantities are exact sums over the
event {f = 1}, never sampled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BooleanFunction,
    PivotalError,
    check_coordinate,
    is_monotone,
    pivotal_counts,
)
from .measure import check_bias, check_open_bias, probabilities, s_n_values, x_values


@dataclass(frozen=True)
class InfluenceProfile:
    p: float
    per_coord: tuple[float, ...]
    total: float
    monotone_input: bool


@dataclass(frozen=True)
class ConditionalStats:
    p: float
    prob_one: float
    cond_pivotal: float  # E(|P(f)| given f=1)
    cond_sn: float       # E(S_n given f=1)
    cond_xi: tuple[float, ...]  # E(X_i f given f=1) per coordinate


class SecondOrderMatrix:
    """Off-diagonal correlations E(X_i X_k f); symmetric, diagonal undefined."""

    def __init__(self, n: int, entries: np.ndarray):
        self.n = n
        self.entries = entries

    def value(self, i: int, k: int) -> float:
        check_coordinate(i, self.n)
        check_coordinate(k, self.n)
        if i == k:
            raise PivotalError("diagonal entries are undefined")
        return float(self.entries[i - 1, k - 1])

    def off_diagonal_square_sum(self) -> float:
        """Sum of squared entries over ordered pairs i != k."""
        sq = np.square(self.entries)
        np.fill_diagonal(sq, 0.0)
        return float(sq.sum())


def _pivotal_mask(f: BooleanFunction, i: int) -> np.ndarray:
    idx = np.arange(1 << f.n)
    bit = 1 << (i - 1)
    return f.table[idx | bit] != f.table[idx & ~bit]


def influence(f: BooleanFunction, i: int, p: float) -> float:
    """P(i is pivotal for f) = E|delta_i f|; valid for any f, p in [0, 1]."""
    check_coordinate(i, f.n)
    check_bias(p)
    return float(probabilities(f.n, p)[_pivotal_mask(f, i)].sum())


def total_influence(f: BooleanFunction, p: float) -> InfluenceProfile:
    """Per-coordinate influences and their sum E|P(f)|."""
    weights = probabilities(f.n, p)
    per = tuple(float(weights[_pivotal_mask(f, i)].sum()) for i in range(1, f.n + 1))
    return InfluenceProfile(p=p, per_coord=per, total=float(sum(per)),
                            monotone_input=is_monotone(f))


def correlation_xi(f: BooleanFunction, i: int, p: float) -> float:
    """Signed correlation E(X_i f); equals the influence only for monotone f."""
    return float((x_values(f.n, i, p) * f.values()) @ probabilities(f.n, p))


def conditional_stats(f: BooleanFunction, p: float) -> ConditionalStats:
    """Exact conditional expectations over the event {f = 1}."""
    check_open_bias(p)
    weights = probabilities(f.n, p)
    mask = f.table == 1
    prob_one = float(weights[mask].sum())
    if prob_one == 0.0:
        raise PivotalError("conditioning on {f=1} with P(f=1) = 0")
    counts = pivotal_counts(f).astype(np.float64)
    cond_pivotal = float((counts[mask] * weights[mask]).sum()) / prob_one
    cond_sn = float((s_n_values(f.n, p)[mask] * weights[mask]).sum()) / prob_one
    cond_xi = tuple(
        float((x_values(f.n, i, p)[mask] * weights[mask]).sum()) / prob_one
        for i in range(1, f.n + 1)
    )
    return ConditionalStats(p=p, prob_one=prob_one, cond_pivotal=cond_pivotal,
                            cond_sn=cond_sn, cond_xi=cond_xi)


def conditional_pivotal_probs(f: BooleanFunction, p: float) -> tuple[float, ...]:
    """P(i in P(f) given f=1) for each coordinate."""
    check_open_bias(p)
    weights = probabilities(f.n, p)
    mask = f.table == 1
    prob_one = float(weights[mask].sum())
    if prob_one == 0.0:
        raise PivotalError("conditioning on {f=1} with P(f=1) = 0")
    return tuple(
        float(weights[_pivotal_mask(f, i) & mask].sum()) / prob_one
        for i in range(1, f.n + 1)
    )


def second_order(f: BooleanFunction, p: float) -> SecondOrderMatrix:
    """All off-diagonal E(X_i X_k f), filled symmetrically."""
    check_open_bias(p)
    weights = probabilities(f.n, p)
    fw = f.values() * weights
    xs = [x_values(f.n, i, p) for i in range(1, f.n + 1)]
    entries = np.zeros((f.n, f.n))
    np.fill_diagonal(entries, np.nan)
    for i in range(f.n):
        for k in range(i + 1, f.n):
            e = float((xs[i] * xs[k]) @ fw)
            entries[i, k] = e
            entries[k, i] = e
    return SecondOrderMatrix(f.n, entries)


def pivotal_indicator(f: BooleanFunction, k: int) -> BooleanFunction:
    """The Boolean function 1{k is pivotal for f}; independent of coordinate k."""
    check_coordinate(k, f.n)
    table = _pivotal_mask(f, k).astype(np.uint8)
    return BooleanFunction(f.n, table, origin=f"pivotal-indicator({f.origin},{k})")
