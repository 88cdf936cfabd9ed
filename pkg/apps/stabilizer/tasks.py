"""
Background verification of generator catalogs.
"""
from celery import shared_task

from apps.tilings.builder import build

from .catalog import catalog_for_system
from .serializers import VerificationReportSerializer
from .verification import verify_catalog


@shared_task
def verify_catalog_task(tiling, search_range):
    """Verify one catalog and return the serialized report."""
    system = build(tiling)
    report = verify_catalog(system, catalog_for_system(system), search_range)
    return VerificationReportSerializer(report).data

