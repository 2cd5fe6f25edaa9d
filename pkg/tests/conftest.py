"""Shared brute-force oracles, kept deliberately independent of the
vectorized library paths: literal products, explicit configuration loops."""

import numpy as np
import pytest

from pivotal.core import discrete_derivative, get_bit, set_coordinate


def brute_prob(omega, n, p):
    """Literal n-term product, not the exponent-counting shortcut."""
    out = 1.0
    for i in range(1, n + 1):
        out *= p if get_bit(omega, i) else (1.0 - p)
    return out


def brute_expectation(f, p, value=None):
    value = value if value is not None else f.eval
    return sum(value(w) * brute_prob(w, f.n, p) for w in range(1 << f.n))


def brute_influence(f, i, p):
    return sum(
        brute_prob(w, f.n, p)
        for w in range(1 << f.n)
        if discrete_derivative(f, i, w) != 0
    )


def brute_x(w, i, p):
    return 1.0 / p if get_bit(w, i) else -1.0 / (1.0 - p)


def brute_sn(w, n, p):
    return sum(brute_x(w, i, p) for i in range(1, n + 1))


def brute_conditional(f, p):
    """(prob_one, cond_pivotal, cond_sn) by explicit enumeration."""
    num_p = num_s = prob_one = 0.0
    for w in range(1 << f.n):
        if not f.eval(w):
            continue
        pw = brute_prob(w, f.n, p)
        prob_one += pw
        count = sum(
            1 for i in range(1, f.n + 1)
            if f.eval(set_coordinate(w, i, 1)) != f.eval(set_coordinate(w, i, 0))
        )
        num_p += count * pw
        num_s += brute_sn(w, f.n, p) * pw
    return prob_one, num_p / prob_one, num_s / prob_one


def brute_second_order(f, i, k, p):
    return sum(
        brute_x(w, i, p) * brute_x(w, k, p) * f.eval(w) * brute_prob(w, f.n, p)
        for w in range(1 << f.n)
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
