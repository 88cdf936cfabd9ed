"""
Re-expressing a flag system over a sublattice of its translations.
"""
import math
from fractions import Fraction

from apps.core.exceptions import FlagSystemError

from .flags import FlagSystem


def _determinant(t1, t2):
    return t1[0] * t2[1] - t1[1] * t2[0]


def reduce_modulo(point, t1, t2):
    """Split an integer point into (coset representative, sublattice coordinates)."""
    det = _determinant(t1, t2)
    x, y = point
    u = math.floor(Fraction(t2[1] * x - t2[0] * y, det))
    v = math.floor(Fraction(t1[0] * y - t1[1] * x, det))
    representative = (x - u * t1[0] - v * t2[0], y - u * t1[1] - v * t2[1])
    return representative, (u, v)


def coset_representatives(t1, t2):
    """Integer points of the half-open parallelogram spanned by t1 and t2, (0, 0) first."""
    det = _determinant(t1, t2)
    if det == 0:
        raise FlagSystemError(f'translations {t1} and {t2} are not independent')
    corners = [(0, 0), t1, t2, (t1[0] + t2[0], t1[1] + t2[1])]
    xs = [corner[0] for corner in corners]
    ys = [corner[1] for corner in corners]
    representatives = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            representative, shift = reduce_modulo((x, y), t1, t2)
            if shift == (0, 0):
                representatives.append(representative)
    representatives.sort(key=lambda point: (point != (0, 0), point))
    if len(representatives) != abs(det):
        raise FlagSystemError(f'expected {abs(det)} coset representatives, found {len(representatives)}')
    return representatives


def rebase(system, t1, t2, base_class, convention=None):
    """
    Flag system of the same tiling over the sublattice spanned by t1 and t2.

    t1 and t2 are integer vectors in the current cell coordinates. A new
    class is an old class paired with a coset representative, so the
    class count grows by the index of the sublattice. The base flag keeps
    its old class with the zero representative.
    """
    representatives = coset_representatives(t1, t2)
    positions = {representative: k for k, representative in enumerate(representatives)}
    index = len(representatives)

    def new_class(old_class, representative):
        return old_class * index + positions[representative]

    adjacency = []
    triangles = []
    for old_class in range(system.class_count):
        for representative in representatives:
            row = []
            for target, offset in system.adjacency[old_class]:
                moved = (representative[0] + offset[0], representative[1] + offset[1])
                target_representative, shift = reduce_modulo(moved, t1, t2)
                row.append((new_class(target, target_representative), shift))
            adjacency.append(tuple(row))
            dx, dy = system.lattice_vector(representative)
            triangles.append(tuple((x + dx, y + dy) for x, y in system.triangles[old_class]))

    basis = (system.lattice_vector(t1), system.lattice_vector(t2))
    return FlagSystem(
        system.tiling, adjacency, triangles, basis,
        base_class=new_class(base_class, (0, 0)),
        convention=convention or system.convention,
    )
