"""
Breadth-first search on the infinite flag graph.
"""
from collections import deque

from apps.core.exceptions import WalkError
from apps.words import Letter, Word


def bfs_distances(system, root, limit):
    """Graph distance from `root` of every flag within `limit` steps."""
    distances = {root: 0}
    queue = deque([root])
    while queue:
        flag = queue.popleft()
        distance = distances[flag]
        if distance == limit:
            continue
        for label in range(3):
            neighbour = system.adjacent(flag, label)
            if neighbour not in distances:
                distances[neighbour] = distance + 1
                queue.append(neighbour)
    return distances


def bfs_layers(system, root):
    """Yield (distance, flags at that distance) outward from `root`, forever."""
    seen = {root}
    layer = [root]
    distance = 0
    while layer:
        yield distance, layer
        following = []
        for flag in layer:
            for label in range(3):
                neighbour = system.adjacent(flag, label)
                if neighbour not in seen:
                    seen.add(neighbour)
                    following.append(neighbour)
        layer = following
        distance += 1


def shortest_word(system, source, target, limit):
    """Word of a shortest walk from `source` to `target`, ties broken by label order."""
    parents = {source: None}
    queue = deque([(source, 0)])
    while queue:
        flag, distance = queue.popleft()
        if flag == target:
            labels = []
            while parents[flag] is not None:
                flag, label = parents[flag]
                labels.append(label)
            return Word(tuple(Letter(label) for label in reversed(labels)))
        if distance == limit:
            continue
        for label in range(3):
            neighbour = system.adjacent(flag, label)
            if neighbour not in parents:
                parents[neighbour] = (flag, label)
                queue.append((neighbour, distance + 1))
    raise WalkError(f'{target} is farther than {limit} steps from {source}')


def walk_max_distance(system, word, root=None):
    """Largest graph distance from the start flag among the flags the walk visits."""
    root = system.base_flag if root is None else root
    walk = system.walk_of(root, word)
    distances = bfs_distances(system, root, len(word))
    return max(distances[flag] for flag in walk.flags)
