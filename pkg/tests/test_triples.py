from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from sperner.construct.triples import binom_product_counts, check_e_condition, comp_triples
from sperner.errors import TripleHypothesisError

from oracles import triple_hypothesis, triples_feasible


def assert_valid(t, counts, p, out):
    assert len(out) == p
    use = Counter(x for tri in out for x in tri)
    for tri in out:
        assert sum(tri) == 0 and all(-t <= x <= t for x in tri)
    for i in range(1, t + 1):
        assert use[i] == use[-i]
        assert use[i] <= counts[i]
    assert use[0] <= counts[0]


def test_single_s1_triple():
    assert comp_triples(1, (2, 1), 1) == [(-1, 0, 1)]


def test_all_zero_types():
    assert comp_triples(1, (9, 0), 3) == [(0, 0, 0)] * 3


def test_t2_example():
    out = comp_triples(2, (7, 5, 2), 4)
    assert_valid(2, (7, 5, 2), 4, out)
    assert triples_feasible(2, (7, 5, 2), 4)


def test_hypothesis_failure_names_condition():
    with pytest.raises(TripleHypothesisError) as info:
        comp_triples(2, (3, 3, 1), 2)
    assert info.value.condition == "e_i >= e_{i+1} + s" and info.value.index == 0


def test_too_many_triples():
    with pytest.raises(TripleHypothesisError, match="floor"):
        comp_triples(1, (3, 0), 2)


@settings(max_examples=300, deadline=None)
@given(t=st.integers(1, 3), data=st.data())
def test_matches_oracle_on_hypothesis_inputs(t, data):
    counts = tuple(data.draw(st.integers(0, 30)) for _ in range(t + 1))
    p = data.draw(st.integers(0, 8))
    if triple_hypothesis(t, counts, p):
        out = comp_triples(t, counts, p)
        assert_valid(t, counts, p, out)
        assert triples_feasible(t, counts, p)
    else:
        with pytest.raises(TripleHypothesisError):
            comp_triples(t, counts, p)


def test_large_s_steps_use_bookkeeping():
    # s >= 3 branches, odd and even
    for t, counts, p in [(3, (40, 30, 20, 5), 12), (4, (90, 70, 50, 30, 6), 20), (5, (200, 150, 100, 60, 25, 4), 30)]:
        assert_valid(t, counts, p, comp_triples(t, counts, p))


def test_e_condition():
    assert binom_product_counts(6, 1) == [9, 3]
    assert check_e_condition(6, 1)
    assert check_e_condition(22, 4)
    for t in range(1, 7):
        assert check_e_condition(6 * t - 2, t)
