"""
Witnesses that the flag stabilizer of a uniform tiling has no finite
generating set: for any distance d, a stabilizer element whose walk
must travel beyond d.
"""
from dataclasses import dataclass

from django.conf import settings

from apps.core.exceptions import CatalogError, WalkError
from apps.core.utils import log_activity
from apps.flag_graph.distances import bfs_layers, shortest_word, walk_max_distance
from apps.tilings.flags import CellKind, CellRef, Flag
from apps.words import Word

from .elements import FACE_ROTATION, cell_conjugate


@dataclass(frozen=True)
class Witness:
    word: Word
    flag: Flag
    face: CellRef
    codegree: int
    distance: int
    max_distance: int


def _cell_norm(flag, root):
    return max(abs(flag.cell[0] - root.cell[0]), abs(flag.cell[1] - root.cell[1]))


def infinite_witness(system, distance, search_limit=None):
    """
    Stabilizer element built around the nearest short face beyond `distance`.

    Among the flags in the first BFS layer past `distance` that lie on a face
    whose co-degree is below the cover's p, take the one with the smallest
    co-degree, ties going to the flag whose lattice cell lies farthest from
    Φ's (then flag order). With t a shortest word reaching it, the
    witness is t · (ab)^co-degree · t⁻¹: it fixes Φ, is not a relation of the
    cover, and its walk reaches beyond `distance`.

    Raises:
        CatalogError: the tiling is regular, so every face has co-degree p
        WalkError: no short face within `search_limit` layers past `distance`
    """
    if distance < 0:
        raise ValueError('distance must be non-negative')
    if system.tiling.is_regular:
        raise CatalogError(f'{system.tiling} is regular; every face loop is a relation')
    search_limit = search_limit or settings.WITNESS_SEARCH_LIMIT
    p = system.cover[0]
    root = system.base_flag
    for layer_distance, layer in bfs_layers(system, root):
        if layer_distance > distance + search_limit:
            break
        if layer_distance <= distance:
            continue
        short = [flag for flag in layer if system.codegree(flag) < p]
        if not short:
            continue
        flag = min(short, key=lambda f: (system.codegree(f), -_cell_norm(f, root), f))
        codegree = system.codegree(flag)
        word = cell_conjugate(shortest_word(system, root, flag, layer_distance), FACE_ROTATION, codegree)
        witness = Witness(
            word=word,
            flag=flag,
            face=system.cell_of(flag, CellKind.FACE),
            codegree=codegree,
            distance=layer_distance,
            max_distance=walk_max_distance(system, word),
        )
        log_activity('WITNESS', 'tiling', f'stabilizer witness on {system.tiling}', {
            'distance': distance, 'flag': str(flag), 'codegree': codegree, 'length': len(word),
        })
        return witness
    raise WalkError(f'{system.tiling}: no face of co-degree below {p} within {search_limit} steps past {distance}')


def patch_reach(system, radius):
    """Largest graph distance from Φ of any flag whose cell lies in the radius window."""
    window = set(system.flags_in_window(radius))
    found = 0
    reach = 0
    for layer_distance, layer in bfs_layers(system, system.base_flag):
        hits = sum(flag in window for flag in layer)
        if hits:
            found += hits
            reach = layer_distance
        if found == len(window):
            return reach
    return reach


def exceeds_patch(system, radius):
    """
    Witness whose walk leaves the radius window.

    Built at the graph reach of the window, so it visits a flag farther
    from Φ than every flag of the window.

    Returns:
        (Witness, escapes) where `escapes` says whether the walk visits a
        flag outside the window
    """
    witness = infinite_witness(system, patch_reach(system, radius))
    window = set(system.flags_in_window(radius))
    walk = system.walk_of(system.base_flag, witness.word)
    return witness, any(flag not in window for flag in walk.flags)


def witness_distances(system, distances):
    """Max walk distance of the witness for each requested distance."""
    return {distance: infinite_witness(system, distance).max_distance for distance in distances}
