"""
Custom middleware for the tiling API.
"""
import logging
import time

from django.utils.deprecation import MiddlewareMixin

logger = logging.getLogger('apps.activity')


class ActivityLogMiddleware(MiddlewareMixin):
    """Middleware to log API requests."""

    excluded_paths = ['/static/', '/favicon.ico']

    def process_request(self, request):
        request._activity_started = time.perf_counter()

    def process_response(self, request, response):
        """Log every API request with its status and elapsed time."""
        if any(request.path.startswith(path) for path in self.excluded_paths):
            return response

        started = getattr(request, '_activity_started', None)
        elapsed_ms = round((time.perf_counter() - started) * 1000, 1) if started else None
        logger.info(
            'API %s %s -> %s (%s ms)', request.method, request.path, response.status_code, elapsed_ms,
            extra={'action': 'REQUEST', 'resource_type': 'API'},
        )
        return response
