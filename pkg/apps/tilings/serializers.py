"""
Serializers for tilings app.
"""
from rest_framework import serializers

from apps.tilings.flags import CellKind


def _point(point):
    return [float(point[0]), float(point[1])]


class FlagSystemSerializer(serializers.Serializer):
    """Summary of a flag system; `detail=True` in the context adds the base flag triangle."""

    name = serializers.CharField(source='tiling.value')
    slug = serializers.CharField(source='tiling.slug')
    regular = serializers.BooleanField(source='tiling.is_regular')
    vertex_configuration = serializers.ListField(source='tiling.vertex_configuration', child=serializers.IntegerField())
    classes = serializers.IntegerField(source='class_count')
    cover = serializers.ListField(child=serializers.IntegerField())
    vertex_degree = serializers.IntegerField()
    base_class = serializers.IntegerField()
    convention = serializers.CharField()
    basis = serializers.SerializerMethodField()
    codegrees = serializers.SerializerMethodField()
    cells_per_lattice_cell = serializers.SerializerMethodField()

    def get_basis(self, system):
        return [_point(vector) for vector in system.basis]

    def get_codegrees(self, system):
        return sorted({codegree for _, codegree in system.face_classes})

    def get_cells_per_lattice_cell(self, system):
        return {kind.value: len(system.cells_in_cell(kind, (0, 0))) for kind in CellKind}

    def to_representation(self, system):
        data = super().to_representation(system)
        if self.context.get('detail'):
            data['base_flag'] = {
                'class': system.base_class,
                'triangle': [_point(point) for point in system.embed(system.base_flag)],
            }
        return data
