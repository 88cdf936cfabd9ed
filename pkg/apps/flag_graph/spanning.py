"""
Breadth-first spanning trees of a patch and the cotree generators they induce.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx

from apps.core.exceptions import DisconnectedPatchError, WalkError
from apps.tilings import Flag
from apps.words import EMPTY, Letter, Word, concat, inverse

from .patches import Patch

logger = logging.getLogger(__name__)


@dataclass
class SpanningTree:
    """Parent pointers from every patch flag toward the root, with the tree path words."""

    root: Flag
    parent: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.words)

    def contains_edge(self, u, v):
        return (self.parent.get(v) or (None,))[0] == u or (self.parent.get(u) or (None,))[0] == v

    def depth(self, flag):
        return len(self.words[flag])


@dataclass(frozen=True)
class CotreeGenerator:
    """Closed walk: tree path to `source`, the edge `label`, tree path back from `target`."""

    source: Flag
    target: Flag
    label: int
    word: Word


@dataclass(frozen=True)
class CotreeFactor:
    generator: int
    sign: int
    word: Word


def spanning_tree(patch):
    """
    BFS spanning tree rooted at the base flag, neighbours visited in label order.

    Raises:
        DisconnectedPatchError: some patch flag cannot be reached from the root
    """
    graph = patch.graph
    root = patch.root
    component = nx.node_connected_component(graph, root)
    if len(component) != graph.number_of_nodes():
        raise DisconnectedPatchError(min(flag for flag in graph if flag not in component))

    tree = SpanningTree(root=root, parent={root: None}, words={root: EMPTY})
    for u, v in nx.generic_bfs_edges(graph, root, neighbors=patch.neighbours_by_label):
        label = patch.label(u, v)
        tree.parent[v] = (u, label)
        tree.words[v] = tree.words[u] + Word((Letter(label),))
    return tree


def tree_word(tree, flag):
    """Word of the unique tree path from the root to `flag`."""
    try:
        return tree.words[flag]
    except KeyError:
        raise WalkError(f'flag {flag} is not in the spanning tree') from None


def cotree_generators(patch, tree):
    """One generator per non-tree edge, ordered by (source, target)."""
    generators = []
    for source, target, label in patch.edges():
        if tree.contains_edge(source, target):
            continue
        word = concat(tree_word(tree, source), Word((Letter(label),)), inverse(tree_word(tree, target)))
        generators.append(CotreeGenerator(source, target, label, word))
    logger.debug(
        'Patch radius %d: %d flags, %d edges, %d cotree generators',
        patch.radius, len(patch), patch.edge_count, len(generators),
    )
    return generators


def decompose_closed_walk(patch, tree, word, generators=None):
    """
    Express a closed walk inside the patch as a product of cotree generators.

    Every edge the walk crosses contributes tree(u)·label·inverse(tree(v));
    tree edges cancel, so only cotree edges are returned, in traversal
    order, with sign -1 when crossed against their stored orientation.
    """
    generators = cotree_generators(patch, tree) if generators is None else generators
    index = {(generator.source, generator.target): k for k, generator in enumerate(generators)}
    walk = patch.system.walk_of(patch.root, word)
    if not walk.is_closed:
        raise WalkError(f'walk of {word} does not return to the base flag')
    factors = []
    for u, v, letter in zip(walk.flags, walk.flags[1:], word):
        if v not in patch:
            raise WalkError(f'walk of {word} leaves the radius-{patch.radius} patch at {v}')
        if tree.contains_edge(u, v):
            continue
        sign = 1 if u < v else -1
        factors.append(CotreeFactor(
            generator=index[(min(u, v), max(u, v))],
            sign=sign,
            word=concat(tree_word(tree, u), Word((letter,)), inverse(tree_word(tree, v))),
        ))
    return factors


def generator_growth(system, radii):
    """Number of cotree generators of the patch of each radius."""
    growth = {}
    for radius in radii:
        patch = Patch(system, radius)
        growth[radius] = len(cotree_generators(patch, spanning_tree(patch)))
    return growth
