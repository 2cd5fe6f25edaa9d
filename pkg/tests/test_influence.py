import pytest

from conftest import (
    brute_conditional,
    brute_influence,
    brute_prob,
    brute_second_order,
)
from pivotal.core import (
    constant,
    dictator,
    majority,
    parity,
    random_function,
    random_monotone,
)
from pivotal.influence import (
    PivotalError,
    conditional_pivotal_probs,
    conditional_stats,
    correlation_xi,
    influence,
    pivotal_indicator,
    second_order,
    total_influence,
)
from pivotal.measure import expectation, probabilities, s_n_values, x_values

P_GRID = [0.1 * k for k in range(1, 10)]


def test_influence_examples():
    for p in P_GRID:
        assert influence(dictator(3, 1), 1, p) == pytest.approx(1.0)
        assert influence(dictator(3, 1), 2, p) == pytest.approx(0.0)
        assert influence(majority(3), 2, p) == pytest.approx(2 * p * (1 - p))
        assert influence(parity(5), 3, p) == pytest.approx(1.0)
    assert influence(majority(3), 1, 0.5) == pytest.approx(0.5)


def test_influence_accepts_endpoints():
    assert influence(majority(3), 1, 0.0) == pytest.approx(0.0)
    assert influence(parity(3), 1, 1.0) == pytest.approx(1.0)


def test_influence_matches_brute_force(rng):
    for _ in range(15):
        f = random_function(5, rng)
        i = int(rng.integers(1, 6))
        p = float(rng.uniform(0, 1))
        assert influence(f, i, p) == pytest.approx(brute_influence(f, i, p),
                                                   abs=1e-12)


def test_total_influence_examples():
    assert total_influence(majority(3), 0.3).total == pytest.approx(1.26)
    for p in P_GRID:
        assert total_influence(constant(4, 1), p).total == 0.0
        assert total_influence(parity(4), p).total == pytest.approx(4.0)


def test_profile_consistency(rng):
    f = random_function(6, rng)
    profile = total_influence(f, 0.35)
    assert profile.total == pytest.approx(sum(profile.per_coord), abs=1e-12)
    assert all(0.0 <= v <= 1.0 for v in profile.per_coord)
    assert not profile.monotone_input


def test_snf_identity_for_monotone(rng):
    # total influence equals E(S_n f) for non-decreasing f
    for _ in range(20):
        f = random_monotone(6, rng)
        for p in (0.2, 0.5, 0.8):
            total = total_influence(f, p).total
            esnf = float((f.values() * s_n_values(6, p)) @ probabilities(6, p))
            assert total == pytest.approx(esnf, rel=1e-9, abs=1e-9)


def test_mr7_identity_for_monotone(rng):
    # E|P(f)| = (1/p) E(|P(f)| f)
    from pivotal.core import pivotal_counts

    for _ in range(20):
        f = random_monotone(5, rng)
        for p in (0.3, 0.6):
            counts = pivotal_counts(f).astype(float)
            weighted = float((counts * f.values()) @ probabilities(5, p))
            assert total_influence(f, p).total == pytest.approx(
                weighted / p, rel=1e-9, abs=1e-9
            )


def test_conditional_stats_majority_example():
    stats = conditional_stats(majority(3), 0.5)
    assert stats.prob_one == pytest.approx(0.5, abs=1e-12)
    assert stats.cond_pivotal == pytest.approx(1.5, abs=1e-12)
    assert stats.cond_sn == pytest.approx(3.0, abs=1e-12)


def test_conditional_stats_dictator():
    for p in (0.2, 0.5, 0.9):
        stats = conditional_stats(dictator(4, 1), p)
        assert stats.cond_pivotal == pytest.approx(1.0)
        assert stats.cond_sn == pytest.approx(1.0 / p)


def test_conditional_stats_null_event():
    with pytest.raises(PivotalError):
        conditional_stats(constant(3, 0), 0.5)


def test_conditional_stats_matches_brute_force(rng):
    for _ in range(10):
        f = random_function(5, rng)
        if f.ones_count() == 0:
            continue
        p = float(rng.uniform(0.1, 0.9))
        prob_one, cond_piv, cond_sn = brute_conditional(f, p)
        stats = conditional_stats(f, p)
        assert stats.prob_one == pytest.approx(prob_one, rel=1e-12)
        assert stats.cond_pivotal == pytest.approx(cond_piv, rel=1e-10)
        assert stats.cond_sn == pytest.approx(cond_sn, rel=1e-10, abs=1e-10)


def test_ral_identity_for_monotone(rng):
    # p E(S_n | f=1) = E(|P(f)| | f=1)
    for _ in range(20):
        f = random_monotone(6, rng)
        if f.ones_count() == 0:
            continue
        for p in (0.25, 0.5, 0.75):
            stats = conditional_stats(f, p)
            assert p * stats.cond_sn == pytest.approx(stats.cond_pivotal,
                                                      rel=1e-9, abs=1e-9)


def test_correlation_equals_influence_only_when_monotone():
    for p in (0.3, 0.5, 0.7):
        for i in (1, 2, 3):
            assert correlation_xi(majority(3), i, p) == pytest.approx(
                influence(majority(3), i, p), rel=1e-10
            )
    # parity: influence 1 but signed correlation 0
    assert influence(parity(2), 1, 0.5) == pytest.approx(1.0)
    assert correlation_xi(parity(2), 1, 0.5) == pytest.approx(0.0, abs=1e-12)
    assert correlation_xi(constant(3, 1), 2, 0.4) == pytest.approx(0.0, abs=1e-12)


def test_second_order_examples(rng):
    # constant 1: E(X_i X_k) = 0 by independence
    so = second_order(constant(3, 1), 0.4)
    assert so.value(1, 2) == pytest.approx(0.0, abs=1e-12)
    # dictator(2,1): factorizes as E(X_1 f) E(X_2) = 0
    assert second_order(dictator(2, 1), 0.5).value(1, 2) == pytest.approx(
        0.0, abs=1e-12
    )
    # majority(3) at p=1/2 is self-dual, so all entries vanish
    assert second_order(majority(3), 0.5).value(1, 2) == pytest.approx(
        0.0, abs=1e-12
    )
    assert brute_second_order(majority(3), 1, 2, 0.5) == pytest.approx(0.0,
                                                                       abs=1e-12)


def test_second_order_matches_brute_force(rng):
    f = random_function(4, rng)
    so = second_order(f, 0.3)
    for i in range(1, 5):
        for k in range(1, 5):
            if i == k:
                continue
            assert so.value(i, k) == pytest.approx(
                brute_second_order(f, i, k, 0.3), abs=1e-12
            )
    with pytest.raises(PivotalError):
        so.value(2, 2)


def test_second_order_symmetry(rng):
    so = second_order(random_function(5, rng), 0.6)
    for i in range(1, 6):
        for k in range(i + 1, 6):
            assert so.value(i, k) == pytest.approx(so.value(k, i), abs=1e-12)


def test_pivotal_indicator_examples():
    assert pivotal_indicator(dictator(3, 1), 1) == constant(3, 1)
    assert pivotal_indicator(dictator(3, 1), 2) == constant(3, 0)
    g = pivotal_indicator(majority(3), 1)
    for w in range(8):
        assert g.eval(w) == int(((w >> 1) & 1) != ((w >> 2) & 1))
    assert expectation(g, 0.5) == pytest.approx(0.5)


def test_pivotal_indicator_ignores_its_own_coordinate(rng):
    f = random_function(5, rng)
    for k in range(1, 6):
        g = pivotal_indicator(f, k)
        bit = 1 << (k - 1)
        for w in range(32):
            assert g.eval(w | bit) == g.eval(w & ~bit)


def test_character_independent_of_own_pivotality(rng):
    # E(X_k 1{k pivotal}) = 0
    for _ in range(10):
        f = random_function(5, rng)
        k = int(rng.integers(1, 6))
        g = pivotal_indicator(f, k)
        p = float(rng.uniform(0.1, 0.9))
        corr = float((x_values(5, k, p) * g.values()) @ probabilities(5, p))
        assert corr == pytest.approx(0.0, abs=1e-12)


def test_conditional_pivotal_probs(rng):
    # brute force: P(i pivotal and f=1) / P(f=1)
    f = random_monotone(4, rng)
    if f.ones_count() == 0:
        f = majority(3)
    p = 0.45
    cond = conditional_pivotal_probs(f, p)
    from pivotal.core import discrete_derivative

    weights = [brute_prob(w, f.n, p) for w in range(1 << f.n)]
    prob_one = sum(weights[w] for w in range(1 << f.n) if f.eval(w))
    for i in range(1, f.n + 1):
        joint = sum(
            weights[w]
            for w in range(1 << f.n)
            if f.eval(w) and discrete_derivative(f, i, w) != 0
        )
        assert cond[i - 1] == pytest.approx(joint / prob_one, rel=1e-10, abs=1e-12)
