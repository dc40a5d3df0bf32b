"""Tests for the REST API server."""

import pytest

from api_server import app

EXAMPLE_A = {'variables': ['x', 'y'], 'prime_basis': [2], 'weights': [['1', '1']]}


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


def test_health(client):
    """Health check endpoint."""
    response = client.get('/health')
    assert response.status_code == 200
    assert response.get_json()['status'] == 'healthy'


def test_status(client):
    response = client.get('/api/status')
    body = response.get_json()
    assert body['success'] is True
    assert 'report' in body['data']['subcommands']
    assert 'settings' in body['data']['config']


def test_residue_endpoint(client):
    response = client.post('/api/residue', json={'session': EXAMPLE_A, 'expressions': ['(x+y)/y']})
    assert response.status_code == 200
    assert response.get_json() == {
        'success': True,
        'data': [{'expression': '(x + y)/(y)', 'residue': 'Y1 + 1'}],
    }


def test_value_endpoint_with_digits(client):
    response = client.post('/api/value', json={'session': EXAMPLE_A, 'expressions': ['x*y'], 'digits': 3})
    assert response.get_json()['data'][0]['approx'] == '0.250'


def test_domain_error_is_422(client):
    response = client.post('/api/residue', json={'session': EXAMPLE_A, 'expressions': ['x/y^2']})
    assert response.status_code == 422
    body = response.get_json()
    assert body['success'] is False
    assert body['error'].startswith('ValueExceedsOne')


@pytest.mark.parametrize("body", [
    {'expressions': ['x']},
    {'session': EXAMPLE_A, 'expressions': ['x +']},
    {'session': EXAMPLE_A, 'expressions': 'x'},
    {'session': {'variables': ['x']}, 'expressions': ['x']},
    {'session': EXAMPLE_A, 'expressions': ['x'], 'digits': 'six'},
    {'session': EXAMPLE_A, 'expressions': ['x'], 'digits': 0},
    {'session': {'variables': ['x'], 'prime_basis': [4], 'weights': [['1']]}, 'expressions': ['x']},
])
def test_usage_errors_are_400(client, body):
    response = client.post('/api/value', json=body)
    assert response.status_code == 400
    assert response.get_json()['success'] is False


def test_non_json_body(client):
    response = client.post('/api/value', data='x', content_type='text/plain')
    assert response.status_code == 400


def test_unknown_subcommand(client):
    response = client.post('/api/nonsense', json={'session': EXAMPLE_A})
    assert response.status_code == 404
    response = client.get('/nowhere')
    assert response.status_code == 404
