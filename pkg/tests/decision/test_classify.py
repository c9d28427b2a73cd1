import numpy as np
import pytest

from laurentreal.decision.classify import Verdict, classify
from laurentreal.decision.families import FAMILIES, family_instances, match_family, matching_families
from laurentreal.errors import NotQ3
from laurentreal.passport.enumerate import enumerate_passports
from laurentreal.passport.laurent import LaurentPassport, RawPassport, canonicalize, validate


@pytest.fixture(params=list(FAMILIES))
def family(request):
    return FAMILIES[request.param]


@pytest.mark.parametrize('colored,face,k,expected', [
    ([(2, 2), (2, 2)], (3, 1), 2, True),
    ([(2, 2, 2), (1, 2, 3)], (3, 3), 3, True),
    ([(2, 2, 2), (1, 2, 3)], (3, 3), 6, True),
    ([(2, 2), (2, 2)], (2, 2), 2, False),
    ([(3, 3), (1, 1, 1, 3)], (3, 3), 1, True),
    ([(2, 2, 2, 2), (1, 1, 3, 3)], (5, 3), 4, True),
    ([(2, 2, 2, 2), (1, 1, 3, 3)], (5, 3), 5, True),
    ([(2, 2), (1, 3)], (3, 1), 1, False),
])
def test_match_family(colored, face, k, expected):
    assert match_family(LaurentPassport(colored, face), k) is expected


def test_match_family_ignores_color_order():
    p = LaurentPassport([(1, 2, 3), (2, 2, 2)], (3, 3))

    assert matching_families(p) == [3, 6]


def test_match_family_needs_q3():
    with pytest.raises(NotQ3):
        match_family(LaurentPassport([(2, 1)] * 3, (2, 1)), 1)

    with pytest.raises(ValueError):
        match_family(LaurentPassport([(2, 2), (2, 2)], (3, 1)), 8)


def test_family_instances_match(family):
    for n in range(3, 13):
        for p in family.instances(n):
            assert p.n == n
            assert isinstance(validate(p.to_raw()), LaurentPassport)
            assert family.matches(p)


def test_family_instances_are_complete(family):
    for n in range(3, 9):
        expected = {canonicalize(p)[0] for p in enumerate_passports(n, 3) if family.matches(p)}
        assert {canonicalize(p)[0] for p in family.instances(n)} == expected


def test_family_instances_chain():
    found = list(family_instances(12))

    assert len(found) == len(set(found))
    assert LaurentPassport([(2,) * 6, (1, 1, 1, 3, 3, 3)], (6, 6)) in found


@pytest.mark.parametrize('p,expected', [
    (RawPassport(((2, 2), (2, 2)), (3, 1)), Verdict.exceptional([2])),
    (RawPassport(((2, 1), (2, 1), (2, 1)), (2, 1)), Verdict.realizable()),
    (RawPassport(((2,) * 6, (1, 1, 1, 3, 3, 3)), (6, 6)), Verdict.exceptional([7])),
    (RawPassport(((3, 1), (3, 1)), (2, 2)), Verdict.realizable()),
    (RawPassport(((2, 2), (1, 3)), (2, 2)), Verdict.exceptional([1, 6])),
])
def test_classify(p, expected):
    assert classify(p) == expected


def test_classify_invalid():
    verdict = classify(RawPassport(((2, 2),), (2, 2)))

    assert verdict.is_invalid
    assert verdict.summary().startswith('INVALID')
    assert any('TooFewPartitions' in reason for reason in verdict.reasons)


def test_verdict_summary():
    assert Verdict.realizable().summary() == 'REALIZABLE'
    assert Verdict.exceptional([6, 1]).summary() == 'EXCEPTIONAL families=[1, 6]'


def test_degree_four_has_two_exceptions():
    verdicts = [classify(p) for p in enumerate_passports(4, 3)]

    assert sum(v.is_exceptional for v in verdicts) == 2


def test_more_colors_always_realizable():
    for n in range(3, 7):
        assert all(classify(p).is_realizable for p in enumerate_passports(n, 4))


@pytest.mark.parametrize('n,q', [(4, 3), (6, 3), (8, 3), (5, 4), (5, 5)])
def test_classify_ignores_relabeling(n, q):
    rng = np.random.default_rng(n * q)
    for p in enumerate_passports(n, q):
        raw = p.to_raw()
        order = rng.permutation(p.r)
        face = raw.face[::-1] if rng.integers(2) else raw.face
        relabeled = RawPassport(tuple(raw.colored[k] for k in order), face)

        assert classify(relabeled) == classify(p), p
