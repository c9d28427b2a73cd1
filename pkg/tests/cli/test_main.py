import json

import pytest

from laurentreal.cli.main import ExitCode, main


@pytest.fixture
def klein_doc(tmp_path):
    path = tmp_path / 'klein.json'
    path.write_text(json.dumps({
        'n': 4,
        'q': 3,
        'convention': 'left-to-right',
        'sigma': [[2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]],
    }))
    return path


@pytest.mark.parametrize('text,out,code', [
    ('2,2;2,2;3,1', 'EXCEPTIONAL families=[2]', ExitCode.NOT_REALIZABLE),
    ('2,1;2,1;2,1;2,1', 'REALIZABLE', ExitCode.OK),
    ('2,2;2,2', 'INVALID', ExitCode.INVALID),
    ('2,2;3,1;2,2', 'INVALID', ExitCode.INVALID),
    ('3,1;3,1;2,2', 'REALIZABLE', ExitCode.OK),
])
def test_check(capsys, text, out, code):
    assert main(['check', text]) == code
    assert capsys.readouterr().out.startswith(out)


def test_build_then_verify(capsys, tmp_path):
    doc = tmp_path / 'witness.json'

    assert main(['build', '2,2;2,2;2,2*', '-o', str(doc)]) == ExitCode.OK
    sigma = json.loads(doc.read_text())['sigma']
    assert len(sigma) == 3

    assert main(['verify', str(doc), '2,2;2,2;2,2*']) == ExitCode.OK
    assert capsys.readouterr().out.strip() == 'PASS'

    assert main(['verify', str(doc), '2,2;2,2;3,1']) == ExitCode.VERIFICATION_FAILED
    assert capsys.readouterr().out.startswith('FAIL face')


def test_build_to_stdout_with_plan(capsys):
    assert main(['build', '2,2;1,3;3,1*', '--show-plan']) == ExitCode.OK

    captured = capsys.readouterr()
    assert json.loads(captured.out)['n'] == 4
    assert 'recipe: cycle+subset-shift' in captured.err


def test_build_exceptional(capsys):
    assert main(['build', '3,3;1,1,1,3;3,3*']) == ExitCode.NOT_REALIZABLE
    assert capsys.readouterr().out.strip() == 'EXCEPTIONAL families=[1]'


def test_build_invalid(capsys):
    assert main(['build', '2,2;2,1;3,1']) == ExitCode.INVALID
    assert capsys.readouterr().out.startswith('INVALID')


def test_verify_other_degree(capsys, klein_doc):
    assert main(['verify', str(klein_doc), '3,1,1;4,1;3,2*']) == ExitCode.VERIFICATION_FAILED
    assert capsys.readouterr().out.startswith('FAIL')


def test_oracle(capsys, tmp_path):
    witness = tmp_path / 'oracle.json'

    assert main(['oracle', '2,2;2,2;2,2*', '-o', str(witness)]) == ExitCode.OK
    assert capsys.readouterr().out.startswith('Realizable')
    assert main(['verify', str(witness), '2,2;2,2;2,2*']) == ExitCode.OK

    assert main(['oracle', '2,2;2,2;3,1']) == ExitCode.NOT_REALIZABLE
    assert main(['oracle', '2,2,2,2;1,1,3,3;5,3*', '--max-nodes', '3', '--no-reduce']) == ExitCode.BUDGET_EXCEEDED


def test_enumerate(capsys):
    assert main(['enumerate', '--n', '4', '--q', '3']) == ExitCode.OK
    lines = capsys.readouterr().out.splitlines()

    assert len(lines) == 8
    assert sum('EXCEPTIONAL' in line for line in lines) == 2

    assert main(['enumerate', '--n', '4', '--q', '3', '--only-exceptional']) == ExitCode.OK
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_export_dot(capsys, klein_doc):
    assert main(['export', str(klein_doc), '--format', 'dot']) == ExitCode.OK
    dot = capsys.readouterr().out

    assert dot.count('fillcolor=black') == 2
    assert dot.count('fillcolor=white') == 2
    assert dot.count(' -- ') == 4


def test_export_rejects_bad_document(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"n": 2, "q": 3, "convention": "left-to-right", "sigma": [[2, 1], [1, 2], [1, 2]]}')

    assert main(['export', str(path)]) == ExitCode.INVALID


def test_missing_file(tmp_path):
    assert main(['export', str(tmp_path / 'missing.json')]) == ExitCode.USAGE


def test_usage_errors():
    assert main([]) == ExitCode.USAGE
    assert main(['enumerate']) == ExitCode.USAGE


def test_families(capsys):
    assert main(['families', '--max-n', '6']) == ExitCode.OK
    lines = capsys.readouterr().out.splitlines()

    assert '2,2;2,2;3,1* families=[2]' in lines
    assert '2,2,2;3,2,1;3,3* families=[3, 6]' in lines


def test_sweep(capsys, tmp_path):
    table = tmp_path / 'sweep.csv'

    assert main(['-v', 'sweep', '--min-n', '3', '--max-n', '5', '--q', '3', '--output', str(table)]) == ExitCode.OK
    header = table.read_text().splitlines()[0]
    assert header.startswith('passport,n,q,s,verdict')
    assert '0 disagreements' in capsys.readouterr().err
