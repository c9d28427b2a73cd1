import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurentreal.constellation.perm import Perm, cycle_type
from laurentreal.passport.partition import Partition


def perms(n):
    return st.permutations(list(range(n))).map(Perm)


def test_left_to_right_product():
    a = Perm.from_cycles(3, [(1, 2)], one_based=True)
    b = Perm.from_cycles(3, [(2, 3)], one_based=True)

    # 1 -a-> 2 -b-> 3
    assert (a * b)(0) == 2
    assert a * b == Perm.from_cycles(3, [(1, 3, 2)], one_based=True)


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])

    with pytest.raises(ValueError):
        Perm.from_cycles(3, [(0, 1), (1, 2)])


def test_one_based_rendering():
    p = Perm.from_one_based([2, 1, 4, 3])

    assert p.images == (1, 0, 3, 2)
    assert p.one_based() == [2, 1, 4, 3]
    assert str(p) == '(1 2)(3 4)'
    assert str(Perm.identity(3)) == '()'


@pytest.mark.parametrize('n,cycles,expected', [
    (5, [], (1, 1, 1, 1, 1)),
    (4, [(1, 2), (3, 4)], (2, 2)),
    (6, [(1, 2, 3), (5, 6)], (1, 2, 3)),
])
def test_cycle_type(n, cycles, expected):
    assert cycle_type(Perm.from_cycles(n, cycles, one_based=True)) == Partition(expected)


def test_cycles_start_at_smallest_point():
    p = Perm.from_cycles(5, [(4, 2, 3)])

    assert p.cycles() == [(0,), (1,), (2, 3, 4)]
    assert p.cycles(include_fixed=False) == [(2, 3, 4)]
    assert p.cycle_of(3) == (3, 4, 2)
    assert p.n_cycles() == 3


@given(st.integers(min_value=1, max_value=8).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_inverse_and_conjugate(pair):
    g, c = pair
    n = g.n

    assert (g * g.inverse()).is_identity()
    assert g.conjugate(c) == c.inverse() * g * c
    assert cycle_type(g.conjugate(c)) == cycle_type(g)
    assert g.conjugate(Perm.identity(n)) == g
