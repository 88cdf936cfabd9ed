from .patches import Patch, build_patch  # noqa: F401
from .spanning import (  # noqa: F401
    CotreeGenerator, SpanningTree, cotree_generators, decompose_closed_walk, generator_growth,
    spanning_tree, tree_word,
)
