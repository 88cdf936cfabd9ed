"""
Names of the eleven vertex-transitive plane tilings.
"""
from enum import Enum

from apps.core.exceptions import UnknownTilingError


class TilingId(str, Enum):
    T3_6_3_6 = '3.6.3.6'
    T4_8_8 = '4.8.8'
    T3_3_4_3_4 = '3.3.4.3.4'
    T3_3_3_4_4 = '3.3.3.4.4'
    T3_4_6_4 = '3.4.6.4'
    T3_3_3_3_6 = '3.3.3.3.6'
    T3_12_12 = '3.12.12'
    T4_6_12 = '4.6.12'
    T3_6 = '3^6'
    T4_4 = '4^4'
    T6_3 = '6^3'

    def __str__(self):
        return self.value

    @property
    def is_regular(self):
        return '^' in self.value

    @property
    def vertex_configuration(self):
        """Face sizes around a vertex in cyclic order."""
        if self.is_regular:
            size, count = self.value.split('^')
            return (int(size),) * int(count)
        return tuple(int(part) for part in self.value.split('.'))

    @property
    def slug(self):
        return self.value.replace('^', '-').replace('.', '-')

    @classmethod
    def parse(cls, name):
        name = str(name).strip()
        for tiling in cls:
            if name in (tiling.value, tiling.slug):
                return tiling
        raise UnknownTilingError(name, [tiling.value for tiling in cls])


UNIFORM_TILINGS = tuple(tiling for tiling in TilingId if not tiling.is_regular)
