from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentreal.builder.subset_sum import criterion_holds, solve_bounded_sum
from laurentreal.errors import NoSolution, UnsortedInput


def brute_force(u, t, s):
    for x in product([0, 1], repeat=len(u)):
        y = s - sum(a * b for a, b in zip(x, u))
        if 0 <= y <= t:
            return True
    return False


instances = st.tuples(
    st.lists(st.integers(min_value=2, max_value=9), max_size=6).map(sorted),
    st.integers(min_value=0, max_value=9),
)


def test_peels_largest_first():
    assert solve_bounded_sum([2, 3], 1, 4) == ((0, 1), 1)


def test_empty_weights():
    assert solve_bounded_sum([], 5, 0) == ((), 0)
    assert solve_bounded_sum([], 5, 5) == ((), 5)


def test_gap_below_first_weight():
    assert not criterion_holds([3], 1)

    with pytest.raises(NoSolution) as info:
        solve_bounded_sum([3], 1, 2)
    assert info.value.reason == NoSolution.UNREPRESENTABLE


def test_search_finds_isolated_targets():
    assert solve_bounded_sum([3], 1, 3) == ((1,), 0)

    with pytest.raises(NoSolution):
        solve_bounded_sum([3], 1, 3, search=False)


def test_out_of_range():
    with pytest.raises(NoSolution) as info:
        solve_bounded_sum([2], 0, 5)
    assert info.value.reason == NoSolution.OUT_OF_RANGE

    with pytest.raises(NoSolution):
        solve_bounded_sum([2], 0, -1)


@pytest.mark.parametrize('u,t', [([3, 2], 1), ([1, 2], 1)])
def test_rejects_bad_weights(u, t):
    with pytest.raises(UnsortedInput):
        solve_bounded_sum(u, t, 0)


def test_rejects_negative_slack():
    with pytest.raises(ValueError):
        solve_bounded_sum([2], -1, 0)


@settings(max_examples=300, deadline=None)
@given(instances)
def test_agrees_with_brute_force(instance):
    u, t = instance
    for s in range(t + sum(u) + 1):
        if brute_force(u, t, s):
            x, y = solve_bounded_sum(u, t, s)
            assert 0 <= y <= t
            assert y + sum(a * b for a, b in zip(x, u)) == s
        else:
            with pytest.raises(NoSolution):
                solve_bounded_sum(u, t, s)


@settings(max_examples=300, deadline=None)
@given(instances)
def test_criterion_means_no_gaps(instance):
    u, t = instance
    no_gaps = all(brute_force(u, t, s) for s in range(t + sum(u) + 1))

    assert criterion_holds(u, t) == no_gaps
