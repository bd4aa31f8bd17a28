import json

import pytest

from algebra.errors import CartanDatumError
from qsp.cartan import CartanDatum, cartan_violations


def test_valid_datum_has_no_violations():
    assert cartan_violations(('1', '2'), [[2, -1], [-1, 2]], [1, 1], {}) == []


def test_every_violation_is_listed():
    violations = cartan_violations(('1', '2'), [[3, 1], [0, 2]], [1, 0], {})
    assert 'a_ii = 2 fails at i=1' in violations
    assert 'd_i > 0 fails at i=2' in violations
    assert 'a_ij <= 0 fails at (i, j)=(1, 2)' in violations
    assert 'a_ij = 0 iff a_ji = 0 fails at (i, j)=(1, 2)' in violations


def test_error_message_joins_violations():
    with pytest.raises(CartanDatumError) as info:
        CartanDatum(('1', '2'), [[2, -1], [-2, 2]], [1, 1])
    assert info.value.violations == ['d_i a_ij = d_j a_ji fails at (i, j)=(1, 2)']
    assert str(info.value) == 'd_i a_ij = d_j a_ji fails at (i, j)=(1, 2)'


def test_tau_must_preserve_the_matrix():
    with pytest.raises(CartanDatumError, match='a_tau\\(i\\)tau\\(j\\) = a_ij'):
        CartanDatum(('1', '2', '3'), [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1], {'1': '2', '2': '1'})


def test_tau_outside_index_set():
    with pytest.raises(CartanDatumError, match='tau maps outside I'):
        CartanDatum(('1', '2'), [[2, -1], [-1, 2]], [1, 1], {'1': '5'})


def test_shape_mismatch():
    with pytest.raises(CartanDatumError, match='must be a 2x2 matrix'):
        CartanDatum(('1', '2'), [[2, -1]], [1, 1])


@pytest.mark.parametrize('suffix, dump', [
    ('.json', json.dumps),
    ('.yaml', lambda raw: 'I: ["1", "2"]\na: [[2, -1], [-1, 2]]\nd: [1, 1]\ntau: {"1": "2", "2": "1"}\n'),
])
def test_load(tmp_path, suffix, dump):
    raw = {'I': ['1', '2'], 'a': [[2, -1], [-1, 2]], 'd': [1, 1], 'tau': {'1': '2', '2': '1'}}
    path = tmp_path / f'datum{suffix}'
    path.write_text(dump(raw))
    datum = CartanDatum.load(path)
    assert datum == CartanDatum.rank_two(-1, 'swap')
    assert datum.tau('1') == '2'


def test_load_missing_key(tmp_path):
    path = tmp_path / 'datum.json'
    path.write_text(json.dumps({'I': ['1'], 'a': [[2]]}))
    with pytest.raises(CartanDatumError, match='missing key d'):
        CartanDatum.load(path)


def test_load_rejects_non_mapping(tmp_path):
    path = tmp_path / 'datum.yaml'
    path.write_text('- 1\n- 2\n')
    with pytest.raises(CartanDatumError, match='must hold a mapping'):
        CartanDatum.load(path)


def test_rank_two(a_ij):
    fixed = CartanDatum.rank_two(a_ij, 'fixed')
    assert fixed.a('1', '2') == a_ij
    assert fixed.tau('1') == '1'
    assert fixed.form('1', '2') == fixed.form('2', '1')
    swapped = CartanDatum.rank_two(a_ij, 'swap')
    assert swapped.tau('1') == '2'
    assert swapped.a('2', '1') == a_ij


def test_three_index(three_index):
    assert three_index.indices == ('1', '2', '3')
    assert three_index.tau('2') == '3'
    assert three_index.c_name('2') == 'c_2'
    assert three_index.c_name('3') == 'c_3'


def test_orthogonal_swapped_pair_shares_its_parameter():
    datum = CartanDatum.rank_two(0, 'swap')
    assert datum.c_name('1') == datum.c_name('2') == 'c_1'
    assert datum.c_symbol('2') == datum.c_symbol('1')


def test_config_round_trip(three_index):
    assert CartanDatum.from_config(three_index.to_config()) == three_index
