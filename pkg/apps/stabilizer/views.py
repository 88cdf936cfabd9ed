"""
Views for stabilizer app.
"""
from django.conf import settings
from rest_framework import status, views
from rest_framework.response import Response

from apps.core.exceptions import CatalogError, PeelError, UnknownTilingError, WalkError, WordSyntaxError
from apps.tilings.builder import build
from apps.words import parse

from .catalog import catalog_for_system
from .peeling import peel
from .serializers import (
    GeneratorCatalogSerializer, PeelFactorSerializer, VerificationReportSerializer, WitnessSerializer,
)
from .tasks import verify_catalog_task
from .verification import verify_catalog
from .witness import infinite_witness


def _integer_param(request, name, default):
    value = request.query_params.get(name, default)
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ValueError(f'{name} must be an integer') from None
    if value < 0:
        raise ValueError(f'{name} must be non-negative')
    return value


class StabilizerView(views.APIView):
    """Base view: resolves the tiling and turns library errors into responses."""

    def handle_exception(self, exc):
        if isinstance(exc, UnknownTilingError):
            return Response({'error': str(exc)}, status=status.HTTP_404_NOT_FOUND)
        if isinstance(exc, (CatalogError, WalkError, WordSyntaxError, PeelError, ValueError)):
            return Response({'error': str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return super().handle_exception(exc)


class CatalogView(StabilizerView):
    """Generator catalog of a uniform tiling."""

    def get(self, request, name):
        system = build(name)
        return Response(GeneratorCatalogSerializer(catalog_for_system(system)).data)


class VerifyView(StabilizerView):
    """Run the catalog checks; POST queues them as a background task."""

    def get(self, request, name):
        search_range = _integer_param(request, 'range', settings.VERIFY_DEFAULT_RANGE)
        system = build(name)
        report = verify_catalog(system, catalog_for_system(system), search_range)
        return Response(VerificationReportSerializer(report).data)

    def post(self, request, name):
        search_range = _integer_param(request, 'range', settings.VERIFY_DEFAULT_RANGE)
        tiling = build(name).tiling
        result = verify_catalog_task.delay(tiling.value, search_range)
        payload = {'task_id': result.id, 'status': result.status}
        if result.ready():
            payload['result'] = result.get()
        return Response(payload, status=status.HTTP_202_ACCEPTED)


class DecomposeView(StabilizerView):
    """Peel a closed walk given as a word expression."""

    def post(self, request, name):
        expression = request.data.get('word')
        if expression is None:
            return Response({'error': 'word is required'}, status=status.HTTP_400_BAD_REQUEST)
        if not isinstance(expression, str):
            return Response({'error': 'word must be a string expression'}, status=status.HTTP_400_BAD_REQUEST)
        system = build(name)
        factors = peel(system, parse(expression))
        return Response({
            'tiling': system.tiling.value,
            'word': expression,
            'factors': PeelFactorSerializer(factors, many=True).data,
        })


class WitnessView(StabilizerView):
    def get(self, request, name):
        distance = _integer_param(request, 'distance', 0)
        system = build(name)
        return Response(WitnessSerializer(infinite_witness(system, distance)).data)
