"""Exact representation of Boolean functions on the discrete cube.

Configurations are plain unsigned integers: coordinate i (1-based) lives in
bit i-1 of the index, so omega(1) is the least significant bit.  Truth tables
are numpy uint8 arrays of length 2**n indexed by configuration, capped at
n <= MAX_EXACT_N so that exhaustive loops stay bounded.  Larger arities go
through FunctionOracle, which only promises pointwise evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

MAX_EXACT_N = 24


class PivotalError(ValueError):
    """Domain or usage error raised by the exact engine."""


def check_coordinate(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise PivotalError(f"coordinate {i} out of range 1..{n}")


def get_bit(omega: int, i: int) -> int:
    """Value of coordinate i (1-based, LSB first) in configuration omega."""
    return (omega >> (i - 1)) & 1


def set_coordinate(omega: int, i: int, b: int) -> int:
    """Configuration agreeing with omega except coordinate i is set to b."""
    if i < 1:
        raise PivotalError(f"coordinate {i} out of range")
    mask = 1 << (i - 1)
    return (omega | mask) if b else (omega & ~mask)


def flip(omega: int, i: int) -> int:
    return omega ^ (1 << (i - 1))


def hamming_weight(omega: int) -> int:
    return int(omega).bit_count()


_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def popcounts(n: int) -> np.ndarray:
    """Hamming weight of every index in [0, 2**n), as a read-only array."""
    pc = _POPCOUNT_CACHE.get(n)
    if pc is None:
        pc = np.zeros(1 << n, dtype=np.uint8)
        for k in range(n):
            half = 1 << k
            pc[half : 2 * half] = pc[:half] + 1
        pc.setflags(write=False)
        _POPCOUNT_CACHE[n] = pc
    return pc


class BooleanFunction:
    """A Boolean function given by its full truth table.

    Immutable after construction; the monotonicity flag and the weight
    enumerator are computed lazily and cached (write-once).
    """

    __slots__ = ("n", "table", "origin", "_monotone", "_weights")

    def __init__(self, n: int, table, origin: str = "table"):
        if not 1 <= n <= MAX_EXACT_N:
            raise PivotalError(f"arity {n} outside exact range 1..{MAX_EXACT_N}")
        tab = np.asarray(table, dtype=np.uint8)
        if tab.shape != (1 << n,):
            raise PivotalError(
                f"table length {tab.size} does not match 2**{n} = {1 << n}"
            )
        if tab.max(initial=0) > 1:
            raise PivotalError("table entries must be 0 or 1")
        tab = tab.copy()
        tab.setflags(write=False)
        self.n = n
        self.table = tab
        self.origin = origin
        self._monotone: bool | None = None
        self._weights: tuple[int, ...] | None = None

    def eval(self, omega: int) -> int:
        return int(self.table[omega])

    def values(self) -> np.ndarray:
        """The table as a float array (for inner products and expectations)."""
        return self.table.astype(np.float64)

    def ones_count(self) -> int:
        return int(self.table.sum())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BooleanFunction)
            and self.n == other.n
            and bool(np.array_equal(self.table, other.table))
        )

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"BooleanFunction(n={self.n}, origin={self.origin!r})"


@dataclass(frozen=True)
class FunctionOracle:
    """Pointwise-evaluable Boolean function, for arities beyond the table cap."""

    n: int
    eval: Callable[[int], int]
    origin: str = "oracle"


def discrete_derivative(f, i: int, omega: int) -> int:
    """f(omega with i set) - f(omega with i cleared); in {-1, 0, 1}."""
    check_coordinate(i, f.n)
    return f.eval(set_coordinate(omega, i, 1)) - f.eval(set_coordinate(omega, i, 0))


def pivotal_set(f, omega: int) -> set[int]:
    """Coordinates whose flip changes the value of f at omega."""
    return {i for i in range(1, f.n + 1) if discrete_derivative(f, i, omega) != 0}


def is_monotone(f: BooleanFunction) -> bool:
    """True iff setting any coordinate never decreases f.  Cached."""
    if f._monotone is None:
        idx = np.arange(1 << f.n)
        mono = True
        for i in range(1, f.n + 1):
            bit = 1 << (i - 1)
            hi = f.table[idx | bit]
            lo = f.table[idx & ~bit]
            if np.any(lo > hi):
                mono = False
                break
        f._monotone = mono
    return f._monotone


def pivotal_counts(f: BooleanFunction) -> np.ndarray:
    """|P(f, omega)| for every configuration, as an int array."""
    idx = np.arange(1 << f.n)
    counts = np.zeros(1 << f.n, dtype=np.int64)
    for i in range(1, f.n + 1):
        bit = 1 << (i - 1)
        counts += f.table[idx | bit] != f.table[idx & ~bit]
    return counts


def weight_enumerator(f: BooleanFunction) -> tuple[int, ...]:
    """a_0..a_n where a_k counts satisfying assignments of Hamming weight k."""
    if f._weights is None:
        pc = popcounts(f.n)
        counts = np.bincount(pc[f.table == 1], minlength=f.n + 1)
        f._weights = tuple(int(c) for c in counts)
    return f._weights


# ---------------------------------------------------------------------------
# Canonical families


def _table_from_predicate(n: int, pred: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return pred(idx).astype(np.uint8)


def dictator(n: int, i: int):
    check_coordinate(i, n)
    if n > MAX_EXACT_N:
        return FunctionOracle(n, lambda w, i=i: get_bit(w, i), f"dictator({n},{i})")
    tab = _table_from_predicate(n, lambda idx: (idx >> (i - 1)) & 1)
    return BooleanFunction(n, tab, f"dictator({n},{i})")


def majority(n: int):
    if n < 1 or n % 2 == 0:
        raise PivotalError(f"majority requires odd n >= 1, got {n}")
    if n > MAX_EXACT_N:
        return FunctionOracle(
            n, lambda w: int(int(w).bit_count() > n // 2), f"majority({n})"
        )
    half = n // 2
    tab = (popcounts(n) > half).astype(np.uint8)
    return BooleanFunction(n, tab, f"majority({n})")


def parity(n: int):
    if n < 1:
        raise PivotalError("parity requires n >= 1")
    if n > MAX_EXACT_N:
        return FunctionOracle(n, lambda w: int(w).bit_count() & 1, f"parity({n})")
    tab = (popcounts(n) & 1).astype(np.uint8)
    return BooleanFunction(n, tab, f"parity({n})")


def all_and(n: int):
    if n < 1:
        raise PivotalError("and requires n >= 1")
    if n > MAX_EXACT_N:
        return FunctionOracle(n, lambda w: int(int(w).bit_count() == n), f"and({n})")
    tab = (popcounts(n) == n).astype(np.uint8)
    return BooleanFunction(n, tab, f"and({n})")


def all_or(n: int):
    if n < 1:
        raise PivotalError("or requires n >= 1")
    if n > MAX_EXACT_N:
        return FunctionOracle(n, lambda w: int(w != 0), f"or({n})")
    tab = _table_from_predicate(n, lambda idx: idx != 0)
    return BooleanFunction(n, tab, f"or({n})")


def tribes(width: int, count: int):
    """OR of `count` disjoint ANDs of `width` consecutive coordinates."""
    if width < 1 or count < 1:
        raise PivotalError("tribes requires positive width and count")
    n = width * count
    masks = [(((1 << width) - 1) << (t * width)) for t in range(count)]

    def ev(w, masks=masks):
        return int(any((w & m) == m for m in masks))

    if n > MAX_EXACT_N:
        return FunctionOracle(n, ev, f"tribes({width},{count})")
    idx = np.arange(1 << n, dtype=np.int64)
    hit = np.zeros(1 << n, dtype=bool)
    for m in masks:
        hit |= (idx & m) == m
    return BooleanFunction(n, hit.astype(np.uint8), f"tribes({width},{count})")


def threshold(weights, theta: float):
    """1 iff the weighted sum of coordinates reaches theta."""
    weights = [float(w) for w in weights]
    n = len(weights)
    if n < 1:
        raise PivotalError("threshold requires at least one weight")

    def ev(w, weights=weights, theta=theta):
        s = sum(c for j, c in enumerate(weights) if (w >> j) & 1)
        return int(s >= theta)

    if n > MAX_EXACT_N:
        return FunctionOracle(n, ev, f"threshold(n={n})")
    idx = np.arange(1 << n, dtype=np.int64)
    total = np.zeros(1 << n)
    for j, c in enumerate(weights):
        total += c * ((idx >> j) & 1)
    return BooleanFunction(n, (total >= theta).astype(np.uint8), f"threshold(n={n})")


def constant(n: int, b: int):
    if n < 1:
        raise PivotalError("constant requires n >= 1")
    b = int(b)
    if b not in (0, 1):
        raise PivotalError("constant value must be 0 or 1")
    if n > MAX_EXACT_N:
        return FunctionOracle(n, lambda w: b, f"constant({n},{b})")
    return BooleanFunction(n, np.full(1 << n, b, dtype=np.uint8), f"constant({n},{b})")


_FAMILIES = {
    "dictator": dictator,
    "majority": majority,
    "parity": parity,
    "and": all_and,
    "or": all_or,
    "tribes": tribes,
    "threshold": threshold,
    "constant": constant,
}


def family(name: str, *params):
    """Look up a built-in family by name: dictator, majority, parity, and,
    or, tribes, threshold, constant."""
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise PivotalError(f"unknown family {name!r}") from None
    return builder(*params)


# ---------------------------------------------------------------------------
# Truth-table file format: line 1 "n=<k>", line 2 a 0/1 string of length 2**k,
# position j giving f at configuration index j (omega(1) = LSB of the index).


def dump_table(f: BooleanFunction) -> str:
    bits = "".join(str(int(b)) for b in f.table)
    return f"n={f.n}\n{bits}\n"


def parse_table(text: str, origin: str = "table") -> BooleanFunction:
    lines = text.splitlines()
    if len(lines) < 2 or not lines[0].startswith("n="):
        raise PivotalError("truth-table file must start with 'n=<k>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise PivotalError(f"bad arity line {lines[0]!r}") from None
    if not 1 <= n <= MAX_EXACT_N:
        raise PivotalError(f"arity {n} outside exact range 1..{MAX_EXACT_N}")
    bits = lines[1].strip()
    if len(bits) != 1 << n:
        raise PivotalError(
            f"table line has {len(bits)} characters, expected {1 << n}"
        )
    if set(bits) - {"0", "1"}:
        raise PivotalError("table line may contain only 0 and 1")
    return BooleanFunction(n, np.frombuffer(bits.encode(), dtype=np.uint8) - ord("0"),
                           origin)


def load_table(path) -> BooleanFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read(), origin=str(path))


# ---------------------------------------------------------------------------
# Generators for test sweeps


def enumerate_monotone(n: int) -> Iterator[BooleanFunction]:
    """All monotone Boolean functions of arity n, by truth-table filtering.

    Intended for small n (the count is the Dedekind-lattice size: 3, 6, 20,
    168 for n = 1..4).
    """
    if not 1 <= n <= 5:
        raise PivotalError("exhaustive monotone enumeration supported for n <= 5")
    size = 1 << n
    lo_masks = []
    for i in range(n):
        m = 1 << i
        lo = 0
        for j in range(size):
            if not j & m:
                lo |= 1 << j
        lo_masks.append((m, lo))
    for t in range(1 << size):
        if all((t & ~(t >> m)) & lo == 0 for m, lo in lo_masks):
            tab = np.array([(t >> j) & 1 for j in range(size)], dtype=np.uint8)
            yield BooleanFunction(n, tab, origin=f"monotone#{t}")


def random_function(n: int, rng: np.random.Generator) -> BooleanFunction:
    tab = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
    return BooleanFunction(n, tab, origin="random")


def random_monotone(n: int, rng: np.random.Generator) -> BooleanFunction:
    """Random monotone function: the up-set generated by a few random points."""
    k = int(rng.integers(0, 2 * n + 2))
    idx = np.arange(1 << n, dtype=np.int64)
    hit = np.zeros(1 << n, dtype=bool)
    for _ in range(k):
        g = int(rng.integers(0, 1 << n))
        hit |= (idx & g) == g
    return BooleanFunction(n, hit.astype(np.uint8), origin="random-monotone")
