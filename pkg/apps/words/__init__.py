from .words import (  # noqa: F401
    EMPTY, Letter, Word, concat, conjugate, format_compact, format_conjugate, format_word,
    free_reduce, inverse, is_reduced, power,
)
from .parser import parse  # noqa: F401
