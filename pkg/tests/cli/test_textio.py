import json

import pytest

from laurentreal.cli.textio import ConstellationDoc, export, format_passport, parse_passport
from laurentreal.constellation.constellation import ConstellationTuple
from laurentreal.constellation.perm import Perm
from laurentreal.errors import AmbiguousFace, DocumentError, NoFace, PassportSyntaxError
from laurentreal.passport.enumerate import enumerate_passports
from laurentreal.passport.laurent import RawPassport, validate


@pytest.fixture
def klein():
    g = [Perm.from_cycles(4, cs, one_based=True) for cs in ([(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)])]
    return ConstellationTuple(g)


@pytest.mark.parametrize('text,expected', [
    ('2,2;2,2;3,1', RawPassport(((2, 2), (2, 2)), (3, 1))),
    ('3,1;2,2*;3,1', RawPassport(((3, 1), (3, 1)), (2, 2))),
    ('2,1;2,1;2,1;2,1', RawPassport(((2, 1), (2, 1), (2, 1)), (2, 1))),
    (' 2, 2 ; 3 ,1* ; 2,2', RawPassport(((2, 2), (2, 2)), (3, 1))),
    ('4;2,1,1;1,3', RawPassport(((4,), (2, 1, 1)), (1, 3))),
])
def test_parse_passport(text, expected):
    assert parse_passport(text) == expected


@pytest.mark.parametrize('text,error', [
    ('2,2;3,1;2,2', AmbiguousFace),
    ('3,1,1;2,2,1', NoFace),
    ('2,2', PassportSyntaxError),
    ('2,2;;3,1', PassportSyntaxError),
    ('2,a;3,1', PassportSyntaxError),
    ('2,2*;3,1*', PassportSyntaxError),
])
def test_parse_passport_errors(text, error):
    with pytest.raises(error):
        parse_passport(text)


def test_format_parses_back():
    for n in range(3, 7):
        for p in enumerate_passports(n, 3):
            assert validate(parse_passport(format_passport(p))) == p


def test_document_layout(klein):
    data = ConstellationDoc(klein).to_dict()

    assert data == {
        'n': 4,
        'q': 3,
        'convention': 'left-to-right',
        'sigma': [[2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]],
    }


def test_document_file_round_trip(klein, tmp_path):
    path = tmp_path / 'klein.json'
    ConstellationDoc(klein).dump(path)

    assert ConstellationDoc.load(path).constellation == klein
    assert json.loads(path.read_text())['convention'] == 'left-to-right'


@pytest.mark.parametrize('data', [
    [1, 2, 3],
    {'n': 2, 'q': 3, 'sigma': [[1, 2]] * 3},
    {'n': 2, 'q': 3, 'convention': 'right-to-left', 'sigma': [[1, 2]] * 3},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[1, 2]] * 2},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[1, 2], [1, 2], [1]]},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[1, 1], [1, 2], [1, 2]]},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[2, 1], [1, 2], [1, 2]]},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[2.7, 1.3], [2.0, 1.0], [1, 2]]},
    {'n': 2, 'q': 3, 'convention': 'left-to-right', 'sigma': [[True, 1], [1, True], [1, 2]]},
    {'n': 2.0, 'q': 3, 'convention': 'left-to-right', 'sigma': [[1, 2]] * 3},
])
def test_document_rejects(data):
    with pytest.raises(DocumentError):
        ConstellationDoc.from_dict(data)


def test_document_rejects_bad_json():
    with pytest.raises(DocumentError):
        ConstellationDoc.loads('{"n": 4,')


def test_export(klein):
    assert export(klein, 'dot').count(' -- ') == 4
    assert ConstellationDoc.loads(export(klein, 'json')).constellation == klein

    with pytest.raises(ValueError):
        export(klein, 'svg')
