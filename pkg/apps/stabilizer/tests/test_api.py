import pytest
from rest_framework.test import APIClient

from apps.stabilizer.serializers import CheckResultSerializer
from apps.stabilizer.verification import CheckResult


@pytest.fixture
def client():
    return APIClient()


def test_check_result_uses_the_pass_key():
    data = CheckResultSerializer(CheckResult('cover', True, 'ok')).data
    assert list(data) == ['name', 'pass', 'detail']
    assert data['pass'] is True


def test_catalog(client):
    response = client.get('/api/stabilizer/4.8.8/catalog/')
    assert response.status_code == 200
    data = response.json()
    assert data['alpha_count'] == 1
    assert data['alphas'][0]['expression'] == '((ab)^4)^(cb)'
    assert data['beta'] == 'ababcbab'


def test_catalog_of_a_regular_tiling(client):
    response = client.get('/api/stabilizer/6-3/catalog/')
    assert response.status_code == 400
    assert 'uniform tilings only' in response.json()['error']


def test_verify(client):
    response = client.get('/api/stabilizer/3.6.3.6/verify/', {'range': 1})
    assert response.status_code == 200
    data = response.json()
    assert data['tiling'] == '3.6.3.6'
    assert all(check['pass'] for check in data['checks'])


def test_verify_rejects_a_negative_range(client):
    assert client.get('/api/stabilizer/3.6.3.6/verify/', {'range': -1}).status_code == 400


def test_verify_in_the_background(client):
    response = client.post('/api/stabilizer/4.8.8/verify/?range=1')
    assert response.status_code == 202
    data = response.json()
    assert data['status'] == 'SUCCESS'
    assert data['result']['tiling'] == '4.8.8'


def test_decompose(client):
    response = client.post('/api/stabilizer/4-4/decompose/', {'word': '(ab)^4c(ab)^4c'}, format='json')
    assert response.status_code == 200
    assert [factor['kind'] for factor in response.json()['factors']] == ['face', 'face']


def test_decompose_open_walk(client):
    response = client.post('/api/stabilizer/4-4/decompose/', {'word': 'abc'}, format='json')
    assert response.status_code == 400


@pytest.mark.parametrize('word', [5, ['a', 'b'], {'a': 1}])
def test_decompose_rejects_a_word_that_is_not_a_string(client, word):
    response = client.post('/api/stabilizer/4-4/decompose/', {'word': word}, format='json')
    assert response.status_code == 400
    assert 'string' in response.json()['error']


def test_decompose_requires_a_word(client):
    assert client.post('/api/stabilizer/4-4/decompose/', {}, format='json').status_code == 400


def test_witness(client):
    response = client.get('/api/stabilizer/3.12.12/witness/', {'distance': 5})
    assert response.status_code == 200
    assert response.json()['max_distance'] > 5


def test_unknown_tiling(client):
    assert client.get('/api/stabilizer/7.7.7/catalog/').status_code == 404
