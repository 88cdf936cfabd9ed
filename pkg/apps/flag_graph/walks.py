"""
Random closed walks, used by property checks and the verification tools.
"""
import networkx as nx

from apps.words import Word, free_reduce

from .distances import shortest_word


def random_reduced_word(rng, length):
    labels = []
    while len(labels) < length:
        label = rng.randrange(3)
        if not labels or labels[-1] != label:
            labels.append(label)
    return Word.from_labels(labels)


def random_closed_word(system, rng, max_length=60):
    """Random word fixing the base flag: a random walk out, a shortest walk home, free-reduced."""
    outbound = random_reduced_word(rng, rng.randint(1, max_length // 2))
    end = system.apply_word(system.base_flag, outbound)
    home = shortest_word(system, end, system.base_flag, limit=len(outbound))
    return free_reduce(outbound + home)


def random_patch_closed_word(patch, rng, steps):
    """Random closed walk that never leaves `patch`."""
    system = patch.system
    flag = patch.root
    labels = []
    for _ in range(steps):
        choices = [label for label in range(3) if system.adjacent(flag, label) in patch]
        label = rng.choice(choices)
        labels.append(label)
        flag = system.adjacent(flag, label)
    path = nx.shortest_path(patch.graph, flag, patch.root)
    labels.extend(patch.label(u, v) for u, v in zip(path, path[1:]))
    return free_reduce(Word.from_labels(labels))
