from .constants import UNIFORM_TILINGS, TilingId  # noqa: F401
from .flags import CellKind, CellRef, Flag, FlagSystem, Walk  # noqa: F401
