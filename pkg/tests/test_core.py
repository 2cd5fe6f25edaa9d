import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pivotal.core import (
    BooleanFunction,
    PivotalError,
    all_and,
    all_or,
    constant,
    dictator,
    discrete_derivative,
    dump_table,
    enumerate_monotone,
    family,
    is_monotone,
    majority,
    parity,
    parse_table,
    pivotal_set,
    random_function,
    random_monotone,
    set_coordinate,
    threshold,
    tribes,
    weight_enumerator,
)

# configurations are ints; omega(1) is the least significant bit


def test_set_coordinate_definition():
    assert set_coordinate(0b000, 2, 1) == 0b010
    assert set_coordinate(0b010, 2, 1) == 0b010  # idempotent
    assert set_coordinate(0b111, 1, 0) == 0b110


@given(st.integers(0, 2**12 - 1), st.integers(1, 12), st.integers(0, 1))
def test_set_coordinate_properties(omega, i, b):
    once = set_coordinate(omega, i, b)
    assert set_coordinate(once, i, b) == once
    assert (once >> (i - 1)) & 1 == b
    # untouched off coordinate i
    mask = ~(1 << (i - 1))
    assert once & mask == omega & mask


def test_set_coordinate_rejects_bad_coordinate():
    with pytest.raises(PivotalError):
        set_coordinate(0, 0, 1)


def test_discrete_derivative_dictator():
    f = dictator(3, 1)
    for w in range(8):
        assert discrete_derivative(f, 1, w) == 1
        assert discrete_derivative(f, 2, w) == 0


def test_discrete_derivative_parity_is_signed():
    f = parity(2)
    # omega with second coordinate set: f(11)=0, f(01)=1
    assert discrete_derivative(f, 1, 0b10) == -1


def test_discrete_derivative_coordinate_range():
    with pytest.raises(PivotalError):
        discrete_derivative(parity(2), 3, 0)


def test_pivotal_set_majority():
    m = majority(3)
    assert pivotal_set(m, 0b011) == {1, 2}  # omega(1)=omega(2)=1, omega(3)=0
    assert pivotal_set(m, 0b111) == set()


def test_pivotal_set_parity_and_constant():
    for w in range(8):
        assert pivotal_set(parity(3), w) == {1, 2, 3}
        assert pivotal_set(constant(3, 0), w) == set()


def test_pivotal_set_matches_derivative(rng):
    f = random_function(5, rng)
    for w in range(32):
        members = pivotal_set(f, w)
        for i in range(1, 6):
            assert (i in members) == (discrete_derivative(f, i, w) != 0)


def test_monotone_flags():
    assert is_monotone(majority(3))
    assert not is_monotone(parity(2))
    assert is_monotone(constant(4, 0))


def test_monotone_derivative_range():
    for f in (majority(3), all_and(4), all_or(4), tribes(2, 2)):
        for w in range(1 << f.n):
            for i in range(1, f.n + 1):
                assert discrete_derivative(f, i, w) in (0, 1)


def test_weight_enumerator_examples():
    assert weight_enumerator(majority(3)) == (0, 0, 3, 1)
    assert weight_enumerator(dictator(3, 1)) == (0, 1, 2, 1)
    assert weight_enumerator(constant(2, 1)) == (1, 2, 1)


def test_weight_enumerator_sums_to_popcount(rng):
    for _ in range(20):
        f = random_function(6, rng)
        assert sum(weight_enumerator(f)) == f.ones_count()


def test_family_examples():
    assert family("dictator", 5, 3).eval(0b00100) == 1
    assert family("tribes", 2, 2).eval(0b0011) == 1  # first tribe satisfied
    with pytest.raises(PivotalError):
        family("majority", 4)
    with pytest.raises(PivotalError):
        family("nonsense", 3)
    with pytest.raises(PivotalError):
        family("tribes", 0, 2)


def test_threshold_family():
    f = threshold([1.0, 1.0, 1.0], 2.0)
    assert np.array_equal(f.table, majority(3).table)


def test_tribes_matches_formula():
    f = tribes(2, 2)  # OR(AND(x1,x2), AND(x3,x4))
    for w in range(16):
        expected = int((w & 3) == 3 or (w >> 2) & 3 == 3)
        assert f.eval(w) == expected


def test_large_arity_goes_through_oracle():
    f = majority(101)
    assert f.n == 101
    assert f.eval((1 << 51) - 1) == 1
    assert f.eval((1 << 50) - 1) == 0


def test_table_validation():
    with pytest.raises(PivotalError):
        BooleanFunction(2, [0, 1, 1])
    with pytest.raises(PivotalError):
        BooleanFunction(2, [0, 1, 2, 0])
    with pytest.raises(PivotalError):
        BooleanFunction(0, [1])


def test_table_format_round_trip():
    f = majority(3)
    assert parse_table(dump_table(f)) == f
    assert dump_table(f) == "n=3\n00010111\n"


def test_table_format_rejects_garbage():
    with pytest.raises(PivotalError):
        parse_table("n=3\n0101\n")
    with pytest.raises(PivotalError):
        parse_table("m=3\n00010111\n")
    with pytest.raises(PivotalError):
        parse_table("n=2\n01x1\n")


def test_monotone_enumeration_dedekind_counts():
    counts = [sum(1 for _ in enumerate_monotone(n)) for n in (1, 2, 3, 4)]
    assert counts == [3, 6, 20, 168]


def test_monotone_enumeration_is_monotone():
    for f in enumerate_monotone(3):
        assert is_monotone(f)


def test_random_monotone_is_monotone(rng):
    for _ in range(50):
        assert is_monotone(random_monotone(6, rng))
