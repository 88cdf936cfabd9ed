"""
Finite patches of the flag graph.
"""
import networkx as nx

from apps.core.exceptions import TilingError


class Patch:
    """
    Induced subgraph of the flag graph on every flag whose cell lies in
    [-radius, radius]². Edges carry the reflection label under `label`.
    """

    def __init__(self, system, radius):
        if radius < 0:
            raise TilingError(f'patch radius must be non-negative, got {radius}')
        self.system = system
        self.radius = radius
        self.graph = nx.Graph()
        flags = system.flags_in_window(radius)
        self.graph.add_nodes_from(flags)
        for flag in flags:
            for label in range(3):
                other = system.adjacent(flag, label)
                if other in self.graph and not self.graph.has_edge(flag, other):
                    self.graph.add_edge(flag, other, label=label)

    def __contains__(self, flag):
        return flag in self.graph

    def __len__(self):
        return self.graph.number_of_nodes()

    @property
    def root(self):
        return self.system.base_flag

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def label(self, u, v):
        return self.graph.edges[u, v]['label']

    def neighbours_by_label(self, flag):
        """Neighbours inside the patch in reflection-label order."""
        return iter(sorted(self.graph[flag], key=lambda other: self.graph[flag][other]['label']))

    def edges(self):
        """Edges as (source, target, label) with source < target, sorted."""
        return sorted(
            (min(u, v), max(u, v), data['label']) for u, v, data in self.graph.edges(data=True)
        )


def build_patch(system, radius):
    """Patch of `radius` around the base flag's lattice cell."""
    return Patch(system, radius)
