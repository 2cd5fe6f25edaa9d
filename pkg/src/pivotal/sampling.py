"""Seeded sampling estimators for arities beyond the exact table cap.

Confidence intervals are distribution-free two-sided Hoeffding intervals for
bounded summands: half_width = sqrt(ln(2/delta) / (2m)) for [0,1]-valued
samples, scaled by n for the pivotal count.  The generator is the
counter-based Philox stream from numpy, pinned by GENERATOR_ID so identical
seeds reproduce identical configuration streams across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FunctionOracle, PivotalError, check_coordinate, flip

GENERATOR_ID = "numpy-philox4x64"

_CHUNK = 4096


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def sample_config(n: int, p: float, rng: np.random.Generator) -> int:
    """One configuration with i.i.d. Bernoulli(p) coordinates."""
    if not 0.0 <= p <= 1.0:
        raise PivotalError(f"bias p={p} outside [0, 1]")
    bits = rng.random(n) < p
    packed = np.packbits(bits, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _sample_stream(n: int, p: float, m: int, rng: np.random.Generator):
    """Yield m configurations, drawing the underlying doubles in chunks.

    The double stream is identical to m successive sample_config calls.
    """
    done = 0
    while done < m:
        batch = min(_CHUNK, m - done)
        bits = rng.random((batch, n)) < p
        packed = np.packbits(bits, axis=1, bitorder="little")
        for row in packed:
            yield int.from_bytes(row.tobytes(), "little")
        done += batch


@dataclass(frozen=True)
class SampleEstimate:
    mean: float
    samples: int
    half_width: float
    delta: float
    seed: int
    generator: str = GENERATOR_ID
    notes: str = ""


def _validate(m: int, delta: float):
    if m < 1:
        raise PivotalError("sample count m must be >= 1")
    if not 0.0 < delta < 1.0:
        raise PivotalError("confidence parameter delta must lie in (0, 1)")


def _half_width(m: int, delta: float) -> float:
    return math.sqrt(math.log(2.0 / delta) / (2.0 * m))


def estimate_mean(oracle: FunctionOracle, p: float, m: int, delta: float,
                  seed: int) -> SampleEstimate:
    """Sample mean of f over m independent configurations."""
    _validate(m, delta)
    rng = make_rng(seed)
    hits = sum(oracle.eval(w) for w in _sample_stream(oracle.n, p, m, rng))
    return SampleEstimate(mean=hits / m, samples=m, half_width=_half_width(m, delta),
                          delta=delta, seed=seed)


def estimate_influence(oracle: FunctionOracle, i: int, p: float, m: int,
                       delta: float, seed: int) -> SampleEstimate:
    """Unbiased estimate of P(i pivotal): two evaluations per sample."""
    _validate(m, delta)
    check_coordinate(i, oracle.n)
    rng = make_rng(seed)
    bit = 1 << (i - 1)
    hits = 0
    for w in _sample_stream(oracle.n, p, m, rng):
        hits += oracle.eval(w | bit) != oracle.eval(w & ~bit)
    return SampleEstimate(mean=hits / m, samples=m, half_width=_half_width(m, delta),
                          delta=delta, seed=seed)


def estimate_total_influence(oracle: FunctionOracle, p: float, m: int,
                             delta: float, seed: int,
                             coordinate_subsample: int | None = None) -> SampleEstimate:
    """Unbiased estimate of E|P(f)|, scaled to [0, n].

    By default every coordinate is scanned per sample (exact in the count
    dimension).  With coordinate_subsample = k, each sample checks k
    uniformly drawn coordinates and scales the count by n/k; the Hoeffding
    half-width is scaled by n in both cases (the per-sample summand lies in
    [0, n]).
    """
    _validate(m, delta)
    n = oracle.n
    k = coordinate_subsample
    if k is not None and not 1 <= k <= n:
        raise PivotalError(f"coordinate subsample {k} out of range 1..{n}")
    rng = make_rng(seed)
    total = 0.0
    for w in _sample_stream(n, p, m, rng):
        base = oracle.eval(w)
        if k is None:
            count = sum(oracle.eval(flip(w, i)) != base for i in range(1, n + 1))
            total += count
        else:
            coords = rng.integers(1, n + 1, size=k)
            count = sum(oracle.eval(flip(w, int(i))) != base for i in coords)
            total += count * (n / k)
    note = ("full coordinate scan per sample" if k is None
            else f"subsample of {k} coordinates per sample, scaled by n/k")
    return SampleEstimate(mean=total / m, samples=m,
                          half_width=n * _half_width(m, delta),
                          delta=delta, seed=seed, notes=note)
