import logging

import pytest
from rest_framework.test import APIClient

from apps.core.utils import format_duration, log_activity, timed_activity


@pytest.fixture(autouse=True)
def propagate_activity(monkeypatch):
    # the apps logger stops at its own handlers; caplog listens on the root
    monkeypatch.setattr(logging.getLogger('apps'), 'propagate', True)


def test_log_activity_carries_structured_fields(caplog):
    with caplog.at_level(logging.INFO, logger='apps.activity'):
        log_activity('EXPORT', 'tiling', 'wrote 4^4', {'classes': 8})
    record = caplog.records[-1]
    assert record.action == 'EXPORT'
    assert record.metadata == {'classes': 8}
    assert 'classes=8' in record.getMessage()


def test_timed_activity_records_elapsed_time(caplog):
    with caplog.at_level(logging.INFO, logger='apps.activity'):
        with timed_activity('VERIFY', 'catalog', '4.8.8') as metadata:
            metadata['checks'] = 6
    assert set(caplog.records[-1].metadata) == {'checks', 'elapsed_ms'}


def test_format_duration():
    assert format_duration(0.25) == '250 ms'
    assert format_duration(3) == '3.00 s'


def test_requests_are_logged(caplog):
    with caplog.at_level(logging.INFO, logger='apps.activity'):
        APIClient().get('/api/tilings/4.8.8/')
    record = caplog.records[-1]
    assert record.action == 'REQUEST'
    assert '/api/tilings/4.8.8/ -> 200' in record.getMessage()
