import json

import pytest
from click.testing import CliRunner

from cli import main


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.fixture
def datum_file(tmp_path):
    path = tmp_path / 'datum.json'
    path.write_text(json.dumps({'I': ['1', '2'], 'a': [[2, -2], [-1, 2]], 'd': [1, 2]}))
    return path


def test_hermite(runner):
    result = runner.invoke(main, ['poly', 'hermite', '0'])
    assert result.exit_code == 0
    assert result.stdout.strip() == '1'


def test_w_from_rank_two(runner):
    result = runner.invoke(main, ['poly', 'w', '2', '--a', '-1'])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'x^2 - c'


def test_w_needs_a_datum(runner):
    assert runner.invoke(main, ['poly', 'w', '2']).exit_code == 2


def test_bipoly_json(runner):
    result = runner.invoke(main, ['bipoly', '1', '1', '--format', 'json'])
    assert result.exit_code == 0
    assert isinstance(json.loads(result.stdout), list)


def test_wmn_from_file(runner, datum_file):
    result = runner.invoke(main, ['wmn', '1', '0', '--cartan', str(datum_file), '--pair', '1', '2'])
    assert result.exit_code == 0
    assert result.stdout.strip() == 'x'


def test_unknown_pair(runner, datum_file):
    result = runner.invoke(main, ['wmn', '1', '1', '--cartan', str(datum_file), '--pair', '1', '7'])
    assert result.exit_code == 2
    assert 'not in I' in result.stderr


def test_invalid_datum_file(runner, tmp_path):
    path = tmp_path / 'bad.yaml'
    path.write_text('I: ["1", "2"]\na: [[2, 1], [1, 2]]\nd: [1, 1]\n')
    result = runner.invoke(main, ['relation', '--cartan', str(path)])
    assert result.exit_code == 2
    assert 'a_ij <= 0 fails' in result.stderr


@pytest.mark.parametrize('a', ['0', '-1', '-2', '-3'])
def test_relation(runner, a):
    result = runner.invoke(main, ['relation', '--a', a])
    assert result.exit_code == 0
    assert result.stdout.startswith('S_12(B_1 *, B_2) = ')


def test_relation_json(runner):
    result = runner.invoke(main, ['relation', '--a', '-2', '--format', 'json'])
    payload = json.loads(result.stdout)
    assert payload['a_ij'] == -2
    assert payload['matches_closed_form']


def test_relation_outside_table(runner):
    assert runner.invoke(main, ['relation', '--a', '-4']).exit_code == 2


def test_verify(runner):
    result = runner.invoke(main, ['verify', 'sums', '--max', '3', '--json'])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report['suite'] == 'sums'
    assert report['failures'] == []
    assert report['wall_time'] is None


def test_verify_text_with_timings(runner):
    result = runner.invoke(main, ['verify', 'univariate', '--max', '2', '--timings'])
    assert result.exit_code == 0
    assert 'wall time' in result.stdout


def test_verify_unknown_suite(runner):
    assert runner.invoke(main, ['verify', 'nonsense']).exit_code == 2


def test_gram_rejects_q(runner):
    result = runner.invoke(main, ['gram', '--q', '1.5'])
    assert result.exit_code == 2
    assert 'q must lie in (0, 1)' in result.stderr


def test_gram(runner):
    result = runner.invoke(main, ['gram', '--maxdeg', '1', '--grid', '128'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['converged']


def test_askey_wilson(runner):
    result = runner.invoke(main, ['askey-wilson', '0.1', '0.2', '0', '0', '--grid', '128'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['holds']
