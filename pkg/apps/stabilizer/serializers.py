"""
Serializers for stabilizer app.
"""
from rest_framework import serializers

from apps.words import format_word


class CheckResultSerializer(serializers.Serializer):
    """One verification check; `pass` is a keyword, so the fields are declared here."""

    def get_fields(self):
        return {
            'name': serializers.CharField(),
            'pass': serializers.BooleanField(source='passed'),
            'detail': serializers.CharField(),
        }


class VerificationReportSerializer(serializers.Serializer):
    tiling = serializers.CharField()
    checks = CheckResultSerializer(many=True)


class WordField(serializers.Field):
    """Words as flat letter strings."""

    def to_representation(self, value):
        return format_word(value)


class EllipticGeneratorSerializer(serializers.Serializer):
    expression = serializers.CharField()
    realized = serializers.CharField(source='realized_expression')
    outbound = WordField()
    cell_word = WordField()
    word = WordField()


class GeneratorCatalogSerializer(serializers.Serializer):
    tiling = serializers.CharField()
    cover = serializers.ListField(child=serializers.IntegerField())
    convention = serializers.CharField(source='convention.value')
    alpha_count = serializers.IntegerField()
    alphas = EllipticGeneratorSerializer(many=True)
    beta = serializers.CharField(source='beta_expression')
    gamma = serializers.CharField(source='gamma_expression')


class PeelFactorSerializer(serializers.Serializer):
    cell = serializers.CharField()
    kind = serializers.CharField(source='cell.kind.value')
    expression = serializers.CharField()
    word = WordField()


class WitnessSerializer(serializers.Serializer):
    word = WordField()
    flag = serializers.CharField()
    face = serializers.CharField()
    codegree = serializers.IntegerField()
    distance = serializers.IntegerField()
    max_distance = serializers.IntegerField()
