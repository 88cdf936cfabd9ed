"""
Periodic geometry of the eleven tilings.

Each tiling is laid out with unit edges by two lattice vectors and a few
seed vertices. Edges are the vertex pairs at unit distance, faces are
traced by angular order around each vertex, and the resulting map is
checked against the vertex configuration before every coordinate is
snapped to an exact rational. The flag tables are read off the map.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from apps.core.exceptions import FlagSystemError

from .constants import TilingId

logger = logging.getLogger(__name__)

TOLERANCE = 1e-6
SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)
SEARCH_OFFSETS = tuple(product(range(-3, 4), repeat=2))
MAX_FACE_SIZE = 24


@dataclass(frozen=True)
class Layout:
    """Float description of one tiling: lattice vectors and seed vertices."""

    lattice: tuple[tuple[float, float], tuple[float, float]]
    seeds: tuple[tuple[float, float], ...]


def _ring(count, radius, start_degrees):
    return tuple(
        (radius * math.cos(math.radians(start_degrees + 360 * k / count)),
         radius * math.sin(math.radians(start_degrees + 360 * k / count)))
        for k in range(count)
    )


def _hexagonal(spacing):
    return (spacing, 0.0), (spacing / 2, spacing * SQRT3 / 2)


_OCTAGON_REACH = (1 + SQRT2) / 2
_DODECAGON = _ring(12, 1 / (2 * math.sin(math.radians(15))), 15)

LAYOUTS = {
    TilingId.T3_6: Layout(_hexagonal(1.0), ((0.0, 0.0),)),
    TilingId.T4_4: Layout(((1.0, 0.0), (0.0, 1.0)), ((0.0, 0.0),)),
    TilingId.T6_3: Layout(_hexagonal(SQRT3), ((0.0, 0.0), (0.0, 1.0))),
    TilingId.T3_6_3_6: Layout(_hexagonal(2.0), ((1.0, 0.0), (0.5, SQRT3 / 2), (1.5, SQRT3 / 2))),
    TilingId.T4_8_8: Layout(
        ((1 + SQRT2, 0.0), (0.0, 1 + SQRT2)),
        ((0.5, _OCTAGON_REACH), (-0.5, _OCTAGON_REACH), (_OCTAGON_REACH, 0.5), (_OCTAGON_REACH, -0.5)),
    ),
    TilingId.T3_12_12: Layout(_hexagonal(2 + SQRT3), _DODECAGON),
    TilingId.T4_6_12: Layout(_hexagonal(3 + SQRT3), _DODECAGON),
    TilingId.T3_4_6_4: Layout(_hexagonal(1 + SQRT3), _ring(6, 1.0, 30)),
    # One hand of the chiral snub hexagonal tiling.
    TilingId.T3_3_3_3_6: Layout(((2.5, SQRT3 / 2), (0.5, 1.5 * SQRT3)), _ring(6, 1.0, 0)),
    TilingId.T3_3_3_4_4: Layout(((1.0, 0.0), (0.5, 1 + SQRT3 / 2)), ((0.0, 0.0), (0.0, 1.0))),
    TilingId.T3_3_4_3_4: Layout(
        (((2 + SQRT3) / 2, 0.5), (-0.5, (2 + SQRT3) / 2)),
        ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)),
    ),
}


def _add(u, v):
    return u[0] + v[0], u[1] + v[1]


def _sub(u, v):
    return u[0] - v[0], u[1] - v[1]


@dataclass(frozen=True)
class PeriodicMap:
    """
    Exact combinatorial map of one translation cell.

    Vertices are orbit representatives; a vertex reference is
    (vertex index, lattice offset). Faces list their vertex references
    counter-clockwise, translated so the face sits in cell (0, 0).
    """

    tiling: TilingId
    basis: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    vertices: tuple[tuple[Fraction, Fraction], ...]
    faces: tuple[tuple[tuple[int, tuple[int, int]], ...], ...]

    def position(self, ref):
        index, (m, n) = ref
        (ax, ay), (bx, by) = self.basis
        x, y = self.vertices[index]
        return x + m * ax + n * bx, y + m * ay + n * by

    def centroid(self, face):
        points = [self.position(ref) for ref in face]
        return (sum((p[0] for p in points), Fraction(0)) / len(points),
                sum((p[1] for p in points), Fraction(0)) / len(points))


def _lattice_coordinates(point, lattice):
    (ax, ay), (bx, by) = lattice
    det = ax * by - ay * bx
    x, y = point
    return (x * by - y * bx) / det, (ax * y - ay * x) / det


def _reduce_seeds(layout):
    """Representatives of the seeds modulo the lattice, in first-seen order."""
    (ax, ay), (bx, by) = layout.lattice
    representatives = []
    for seed in layout.seeds:
        u, v = _lattice_coordinates(seed, layout.lattice)
        u -= math.floor(u + TOLERANCE)
        v -= math.floor(v + TOLERANCE)
        point = (u * ax + v * bx, u * ay + v * by)
        if all(math.dist(point, known) > TOLERANCE for known in representatives):
            representatives.append(point)
    return representatives


def _neighbour_rings(points, lattice):
    """For each vertex, its unit-distance neighbours sorted counter-clockwise."""
    (ax, ay), (bx, by) = lattice
    rings = []
    for p in points:
        found = []
        for j, q in enumerate(points):
            for m, n in SEARCH_OFFSETS:
                dx = q[0] + m * ax + n * bx - p[0]
                dy = q[1] + m * ay + n * by - p[1]
                if abs(math.hypot(dx, dy) - 1) < TOLERANCE:
                    found.append((math.atan2(dy, dx), j, (m, n)))
        found.sort()
        rings.append(tuple((j, offset) for _, j, offset in found))
    return rings


def _trace_face(rings, start, target, offset):
    """Walk the face to the left of the directed edge start -> target."""
    face = [(start, (0, 0))]
    previous, current = (start, (0, 0)), (target, offset)
    for _ in range(MAX_FACE_SIZE):
        if current == (start, (0, 0)):
            return tuple(face)
        face.append(current)
        index, position = current
        ring = rings[index]
        incoming = ring.index((previous[0], _sub(previous[1], position)))
        following, step = ring[incoming - 1]
        previous, current = current, (following, _add(position, step))
    raise FlagSystemError(f'face traced from vertex {start} does not close')


def _canonical_face(face):
    rotations = []
    for r in range(len(face)):
        shift = face[r][1]
        rotated = face[r:] + face[:r]
        rotations.append(tuple((index, _sub(offset, shift)) for index, offset in rotated))
    return min(rotations)


def _matches_configuration(sequence, configuration):
    n = len(configuration)
    if len(sequence) != n:
        return False
    candidates = [tuple(configuration[i:] + configuration[:i]) for i in range(n)]
    reflected = tuple(reversed(configuration))
    candidates += [reflected[i:] + reflected[:i] for i in range(n)]
    return tuple(sequence) in candidates


def _snap(value, denominator):
    return Fraction(round(value * denominator), denominator)


def derive_map(tiling, denominator=10**6):
    """Build the exact periodic map of `tiling` from its float layout."""
    layout = LAYOUTS[tiling]
    points = _reduce_seeds(layout)
    rings = _neighbour_rings(points, layout.lattice)

    configuration = tiling.vertex_configuration
    faces = set()
    for start, ring in enumerate(rings):
        sizes = []
        for target, offset in ring:
            face = _trace_face(rings, start, target, offset)
            sizes.append(len(face))
            faces.add(_canonical_face(face))
        if not _matches_configuration(sizes, list(configuration)):
            raise FlagSystemError(
                f'{tiling}: vertex {start} has faces {sizes}, expected configuration {configuration}'
            )

    edge_count = sum(len(ring) for ring in rings) // 2
    if len(points) - edge_count + len(faces) != 0:
        raise FlagSystemError(f'{tiling}: Euler characteristic of the cell is not zero')

    ordered = sorted(faces, key=lambda face: (-len(face), face))
    logger.debug(
        'Derived %s: %d vertices, %d edges, faces %s',
        tiling, len(points), edge_count, dict(Counter(len(face) for face in ordered)),
    )
    basis = tuple((_snap(x, denominator), _snap(y, denominator)) for x, y in layout.lattice)
    vertices = tuple((_snap(x, denominator), _snap(y, denominator)) for x, y in points)
    return PeriodicMap(tiling=tiling, basis=basis, vertices=vertices, faces=tuple(ordered))


def flag_tables(periodic_map):
    """
    Adjacency and embedding tables of the flags of a periodic map.

    A flag class is (face, position k, side s): its vertex is face[k + s]
    and its edge joins face[k] and face[k + 1].

    Returns:
        (adjacency, triangles) where adjacency[c][i] = (class, cell offset)
        and triangles[c] = (vertex point, edge midpoint, face centroid).
    """
    faces = periodic_map.faces
    classes = [(f, k, s) for f, face in enumerate(faces) for k in range(len(face)) for s in (0, 1)]
    index = {key: position for position, key in enumerate(classes)}

    directed = {}
    for f, face in enumerate(faces):
        n = len(face)
        for k in range(n):
            (a, a_offset), (b, b_offset) = face[k], face[(k + 1) % n]
            directed[(a, b, _sub(b_offset, a_offset))] = (f, k, a_offset)

    adjacency = []
    triangles = []
    for f, k, s in classes:
        face = faces[f]
        n = len(face)
        across_vertex = (index[(f, k, 1 - s)], (0, 0))
        if s == 0:
            across_edge = (index[(f, (k - 1) % n, 1)], (0, 0))
        else:
            across_edge = (index[(f, (k + 1) % n, 0)], (0, 0))
        (x, x_offset), (y, y_offset) = face[k], face[(k + 1) % n]
        g, m, g_offset = directed[(y, x, _sub(x_offset, y_offset))]
        across_face = (index[(g, m, 1 - s)], _sub(y_offset, g_offset))
        adjacency.append((across_vertex, across_edge, across_face))

        start, end = periodic_map.position(face[k]), periodic_map.position(face[(k + 1) % n])
        vertex = periodic_map.position(face[(k + s) % n])
        midpoint = ((start[0] + end[0]) / 2, (start[1] + end[1]) / 2)
        triangles.append((vertex, midpoint, periodic_map.centroid(face)))

    return tuple(adjacency), tuple(triangles)
