import pytest
from rest_framework.test import APIClient


@pytest.fixture
def client():
    return APIClient()


def test_list(client):
    response = client.get('/api/tilings/')
    assert response.status_code == 200
    assert [entry['name'] for entry in response.json()][:2] == ['3.6.3.6', '4.8.8']
    assert len(response.json()) == 11


def test_retrieve(client):
    response = client.get('/api/tilings/3.4.6.4/')
    assert response.status_code == 200
    data = response.json()
    assert data['cover'] == [12, 4]
    assert data['vertex_configuration'] == [3, 4, 6, 4]
    assert data['codegrees'] == [3, 4, 6]
    assert len(data['base_flag']['triangle']) == 3


def test_retrieve_regular_tiling_by_encoded_name(client):
    response = client.get('/api/tilings/4%5E4/')
    assert response.status_code == 200
    assert response.json()['classes'] == 8


def test_unknown_tiling(client):
    response = client.get('/api/tilings/5.5.5/')
    assert response.status_code == 404
    assert '4.8.8' in response.json()['error']


def test_generators(client):
    response = client.get('/api/tilings/4-4/generators/', {'radius': 0})
    assert response.status_code == 200
    data = response.json()
    assert data['flags'] == 8
    assert len(data['generators']) == 1


def test_generators_radius_is_bounded(client):
    assert client.get('/api/tilings/4-4/generators/', {'radius': 9}).status_code == 400
    assert client.get('/api/tilings/4-4/generators/', {'radius': 'x'}).status_code == 400
