import pytest

from laurentreal.constellation.constellation import verify_against
from laurentreal.constellation.perm import Perm, cycle_type
from laurentreal.decision.classify import classify
from laurentreal.errors import InvalidPassport
from laurentreal.oracle.search import OracleResult, SearchBudget, face_permutation, oracle_decide, rotation_group
from laurentreal.passport.enumerate import enumerate_passports
from laurentreal.passport.laurent import LaurentPassport, RawPassport
from laurentreal.passport.partition import Partition


@pytest.fixture(params=[(3, 8), (4, 6), (5, 6)])
def small_passports(request):
    q, max_n = request.param
    return [p for n in range(3, max_n + 1) for p in enumerate_passports(n, q)]


def test_budget_defaults_and_bounds():
    budget = SearchBudget()

    assert budget.max_nodes == SearchBudget.DEFAULT_MAX_NODES
    assert budget.max_millis == SearchBudget.DEFAULT_MAX_MILLIS
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_millis=-5)


def test_face_permutation_blocks():
    g = face_permutation(Partition.of(1, 3))

    assert g == Perm.from_cycles(4, [(1,), (2, 3, 4)], one_based=True)


def test_rotation_group_commutes():
    g = face_permutation(Partition.of(2, 3))
    group = rotation_group(g)

    assert len(group) == 6
    assert all(h * g == g * h for h in group)


def test_two_matchings_with_even_face():
    p = LaurentPassport([(2, 2), (2, 2)], (2, 2))
    result = oracle_decide(p)

    assert result.is_realizable
    assert [cycle_type(g) for g in result.witness.g] == [Partition.of(2, 2)] * 3
    assert verify_against(result.witness, p)


def test_two_matchings_with_odd_face():
    result = oracle_decide(LaurentPassport([(2, 2), (2, 2)], (3, 1)))

    assert result.is_not_realizable
    assert result.tag == OracleResult.NOT_REALIZABLE
    assert result.witness is None


def test_twin_peaks_exhausted():
    result = oracle_decide(LaurentPassport([(2, 2, 2, 2), (1, 1, 3, 3)], (5, 3)))

    assert result.is_not_realizable
    assert result.nodes > 0


def test_budget_exceeded_is_not_a_verdict():
    result = oracle_decide(LaurentPassport([(2, 2, 2, 2), (1, 1, 3, 3)], (5, 3)),
                           SearchBudget(max_nodes=3), reduce=False)

    assert result.budget_exceeded
    assert not result.is_not_realizable
    assert 'BudgetExceeded' in result.summary()


def test_general_passport_sequence():
    result = oracle_decide([(2, 2), (2, 2), (2, 2)])

    assert result.is_realizable
    assert [cycle_type(g) for g in result.witness.g] == [Partition.of(2, 2)] * 3


def test_witness_keeps_color_order():
    p = LaurentPassport([(2, 1, 1), (3, 1), (2, 1, 1)], (2, 2))
    result = oracle_decide(p)

    assert result.is_realizable
    assert result.witness.valency_datum().colored == p.colored


def test_rejects_invalid():
    with pytest.raises(InvalidPassport):
        oracle_decide(RawPassport(((2, 2),), (2, 2)))

    with pytest.raises(InvalidPassport):
        oracle_decide([(2, 2), (3, 1), (2, 2), (2, 2)])


def test_agrees_with_classify(small_passports):
    for p in small_passports:
        result = oracle_decide(p)
        assert result.is_realizable == classify(p).is_realizable, p
        if result.is_realizable:
            assert verify_against(result.witness, p)


def test_reduction_is_sound():
    for n in range(3, 7):
        for p in enumerate_passports(n, 3):
            reduced = oracle_decide(p, reduce=True)
            full = oracle_decide(p, reduce=False)
            assert reduced.tag == full.tag, p


@pytest.mark.parametrize('colored,face', [
    ([(2, 2), (2, 2)], (3, 1)),
    ([(2, 2), (1, 3)], (2, 2)),
    ([(2, 2, 2), (1, 2, 3)], (3, 3)),
    ([(2, 2, 2, 2), (1, 1, 3, 3)], (3, 5)),
    ([(2,) * 6, (1, 1, 1, 3, 3, 3)], (6, 6)),
])
def test_exceptional_instances_exhausted(colored, face):
    result = oracle_decide(LaurentPassport(colored, face))

    assert result.tag == OracleResult.NOT_REALIZABLE
    assert not result.budget_exceeded
