import pytest
from fastapi.testclient import TestClient

from main import app

RANK_TWO = {'I': ['1', '2'], 'a': [[2, -1], [-1, 2]], 'd': [1, 1]}


@pytest.fixture(scope='module')
def client() -> TestClient:
    return TestClient(app)


def test_hermite(client):
    response = client.get('/api/polynomials/hermite/2')
    assert response.status_code == 200
    assert response.json() == {'format': 'text', 'value': '4*x^2 + (v^2 - 1)'}


def test_hermite_json(client):
    response = client.get('/api/polynomials/hermite/1', params={'format': 'json'})
    assert response.status_code == 200
    assert isinstance(response.json(), list)


def test_negative_degree(client):
    assert client.get('/api/polynomials/hermite/-1').status_code == 422


def test_bihermite(client):
    response = client.get('/api/polynomials/bihermite/1/1', params={'format': 'latex'})
    assert response.status_code == 200
    assert response.json()['format'] == 'latex'


def test_w(client):
    response = client.post('/api/polynomials/w', json={'degree': 2, 'cartan': RANK_TWO})
    assert response.status_code == 200
    assert response.json()['value'] == 'x^2 - c'


def test_wmn(client):
    response = client.post('/api/polynomials/wmn', json={'m': 1, 'n': 0, 'pair': ['2', '1'], 'cartan': RANK_TWO})
    assert response.status_code == 200
    assert response.json()['value'] == 'x'


def test_invalid_datum_lists_violations(client):
    bad = {'I': ['1', '2'], 'a': [[2, 1], [-1, 3]], 'd': [1, 1]}
    response = client.post('/api/polynomials/w', json={'degree': 2, 'cartan': bad})
    assert response.status_code == 422
    detail = response.json()['detail']
    assert 'a_ii = 2 fails at i=2' in detail
    assert 'a_ij <= 0 fails at (i, j)=(1, 2)' in detail


def test_unknown_pair(client):
    response = client.post('/api/relations', json={'pair': ['1', '9'], 'cartan': RANK_TWO})
    assert response.status_code == 422


def test_relation(client):
    response = client.post('/api/relations', json={'cartan': RANK_TWO})
    assert response.status_code == 200
    payload = response.json()
    assert payload['pair'] == ['1', '2']
    assert payload['a_ij'] == -1
    assert payload['matches_closed_form']


def test_verify(client):
    response = client.post('/api/verify/sums', json={'max': 2})
    assert response.status_code == 200
    assert response.json()['failures'] == []


def test_verify_unknown_suite(client):
    response = client.post('/api/verify/nonsense', json={})
    assert response.status_code == 400


def test_gram(client):
    response = client.post('/api/numeric/gram', json={'maxdeg': 0, 'grid': 64})
    assert response.status_code == 200
    assert response.json()['indices'] == [[0, 0]]


def test_gram_rejects_grid(client):
    assert client.post('/api/numeric/gram', json={'grid': 8}).status_code == 422
