"""
Utility functions shared by the apps.
"""
import logging
import time
from contextlib import contextmanager

logger = logging.getLogger('apps.activity')


def log_activity(action, resource_type, description, metadata=None):
    """
    Emit one structured activity record.

    Args:
        action: Action type (DERIVE, CALIBRATE, VERIFY, PEEL, RENDER, EXPORT...)
        resource_type: Type of resource (tiling, catalog, walk...)
        description: Description of the action
        metadata: Additional metadata (optional)
    """
    metadata = metadata or {}
    details = ' '.join(f'{key}={value}' for key, value in sorted(metadata.items()))
    logger.info(
        '%s %s: %s %s', action, resource_type, description, details,
        extra={'action': action, 'resource_type': resource_type, 'metadata': metadata},
    )


@contextmanager
def timed_activity(action, resource_type, description, metadata=None):
    """Log an activity record carrying the elapsed time of the wrapped block."""
    started = time.perf_counter()
    metadata = dict(metadata or {})
    yield metadata
    metadata['elapsed_ms'] = round((time.perf_counter() - started) * 1000, 1)
    log_activity(action, resource_type, description, metadata)


def format_duration(seconds):
    """Format elapsed seconds in human-readable form."""
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    return f"{seconds:.2f} s"
