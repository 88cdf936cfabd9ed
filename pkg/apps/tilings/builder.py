"""
Building the flag system of a tiling by name.
"""
import logging
from functools import lru_cache
from pathlib import Path

from django.conf import settings

from apps.core.exceptions import FlagSystemError
from apps.core.utils import timed_activity

from .calibration import calibrate
from .constants import TilingId
from .flags import FlagSystem
from .geometry import derive_map, flag_tables
from .tables import load_table

logger = logging.getLogger(__name__)


def table_path(tiling, directory=None):
    directory = directory if directory is not None else settings.TILING_TABLE_DIR
    if not directory:
        return None
    return Path(directory) / f'{tiling.slug}.flags'


def derive(tiling):
    """Derive the flag system from geometry and, for uniform tilings, calibrate its base flag."""
    periodic_map = derive_map(tiling, settings.COORDINATE_DENOMINATOR)
    adjacency, triangles = flag_tables(periodic_map)
    system = FlagSystem(tiling, adjacency, triangles, periodic_map.basis)
    if not tiling.is_regular:
        system, _ = calibrate(system)
    return system


@lru_cache(maxsize=None)
def _build(tiling):
    path = table_path(tiling)
    with timed_activity('DERIVE', 'tiling', f'flag system of {tiling}') as metadata:
        if path is not None and path.exists():
            system = load_table(path.read_text())
            metadata['source'] = str(path)
        else:
            system = derive(tiling)
            metadata['source'] = 'geometry'
        metadata['classes'] = system.class_count
        problems = system.validate()
    if problems:
        raise FlagSystemError(f'{tiling}: ' + '; '.join(problems[:5]))
    return system


def build(tiling):
    """
    Flag system of a tiling, cached per process.

    Args:
        tiling: TilingId or a tiling name such as '4.8.8'

    Raises:
        UnknownTilingError: the name is not one of the eleven tilings
    """
    if not isinstance(tiling, TilingId):
        tiling = TilingId.parse(tiling)
    return _build(tiling)


def clear_cache():
    _build.cache_clear()
