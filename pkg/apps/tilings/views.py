"""
Views for tilings app.
"""
from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.response import Response

from apps.core.exceptions import UnknownTilingError
from apps.flag_graph import build_patch, cotree_generators, spanning_tree
from apps.words import format_word

from .builder import build
from .constants import TilingId
from .serializers import FlagSystemSerializer


class TilingViewSet(viewsets.ViewSet):
    """The eleven tilings and their flag systems."""

    lookup_value_regex = r'[^/]+'

    def list(self, request):
        systems = [build(tiling) for tiling in TilingId]
        return Response(FlagSystemSerializer(systems, many=True).data)

    def retrieve(self, request, pk=None):
        try:
            system = build(pk)
        except UnknownTilingError as exc:
            return Response({'error': str(exc)}, status=status.HTTP_404_NOT_FOUND)
        return Response(FlagSystemSerializer(system, context={'detail': True}).data)

    @action(detail=True, methods=['get'])
    def generators(self, request, pk=None):
        """Cotree generators of the patch of ?radius= (default 1)."""
        try:
            system = build(pk)
            radius = int(request.query_params.get('radius', 1))
        except UnknownTilingError as exc:
            return Response({'error': str(exc)}, status=status.HTTP_404_NOT_FOUND)
        except ValueError:
            return Response({'error': 'radius must be an integer'}, status=status.HTTP_400_BAD_REQUEST)
        if not 0 <= radius <= 4:
            return Response({'error': 'radius must be between 0 and 4'}, status=status.HTTP_400_BAD_REQUEST)

        patch = build_patch(system, radius)
        generators = cotree_generators(patch, spanning_tree(patch))
        return Response({
            'tiling': system.tiling.value,
            'radius': radius,
            'flags': len(patch),
            'edges': patch.edge_count,
            'generators': [format_word(generator.word) for generator in generators],
        })
