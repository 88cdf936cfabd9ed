"""
Flag systems: the finite, translation-periodic description of all flags
of a tiling.

A flag is a flag class plus the lattice cell it sits in. Reflection i
moves a flag to the unique flag that differs from it only in its
i-dimensional element; the three reflections generate every walk.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
import math
from math import lcm
from typing import NamedTuple

from apps.words import Letter, Word, parse, power

from .constants import TilingId


class Flag(NamedTuple):
    """Flag class `flag_class` translated into lattice cell `cell`; ordered by (cell, class)."""

    cell: tuple[int, int]
    flag_class: int

    def translate(self, vector):
        return Flag((self.cell[0] + vector[0], self.cell[1] + vector[1]), self.flag_class)

    def __str__(self):
        return f'{self.flag_class}@({self.cell[0]},{self.cell[1]})'


class CellKind(str, Enum):
    """Barycentric-subdivision vertex a cell loop winds around."""

    VERTEX = 'vertex'
    EDGE = 'edge'
    FACE = 'face'

    @property
    def labels(self):
        """The two reflections whose alternation walks around the cell."""
        return {CellKind.VERTEX: (1, 2), CellKind.EDGE: (0, 2), CellKind.FACE: (0, 1)}[self]

    @property
    def point_slot(self):
        """Index of the cell's point in a flag triangle."""
        return {CellKind.VERTEX: 0, CellKind.EDGE: 1, CellKind.FACE: 2}[self]


class CellRef(NamedTuple):
    """A vertex-, edge- or face-cell; `anchor` is its canonical boundary flag, `size` its half-perimeter."""

    kind: CellKind
    anchor: Flag
    size: int

    def loop(self):
        """Word walking once around the cell from its anchor."""
        i, j = self.kind.labels
        return power(Word.from_labels((i, j)), self.size)

    def __str__(self):
        return f'{self.kind.value}-cell[{self.anchor}]'


@dataclass(frozen=True)
class Walk:
    """Flags visited by a word from `flags[0]`; len(flags) == len(word) + 1."""

    flags: tuple[Flag, ...]
    word: Word

    @property
    def labels(self):
        return tuple(int(letter) for letter in self.word)

    @property
    def start(self):
        return self.flags[0]

    @property
    def end(self):
        return self.flags[-1]

    @property
    def is_closed(self):
        return self.start == self.end

    def __len__(self):
        return len(self.word)


def _add(u, v):
    return u[0] + v[0], u[1] + v[1]


def _neg(u):
    return -u[0], -u[1]


class FlagSystem:
    """
    Flag classes of one tiling with their adjacency and exact embedding.

    Args:
        tiling: TilingId
        adjacency: adjacency[c][i] = (class, cell offset) for reflections i = 0, 1, 2
        triangles: triangles[c] = (vertex point, edge midpoint, face centroid) in cell (0, 0)
        basis: lattice translation vectors t1, t2
        base_class: class of the base flag Φ in cell (0, 0)
        convention: conjugation reading the generator catalog is realized with
    """

    def __init__(self, tiling, adjacency, triangles, basis, base_class=0, convention='as-written'):
        self.tiling = TilingId(tiling)
        self.adjacency = tuple(tuple((int(c), (int(dx), int(dy))) for c, (dx, dy) in row) for row in adjacency)
        self.triangles = tuple(
            tuple((Fraction(x), Fraction(y)) for x, y in triangle) for triangle in triangles
        )
        self.basis = tuple((Fraction(x), Fraction(y)) for x, y in basis)
        self.base_class = base_class
        self.convention = convention

    def __repr__(self):
        return f'FlagSystem({self.tiling}, classes={self.class_count}, base={self.base_class})'

    @property
    def class_count(self):
        return len(self.adjacency)

    @property
    def base_flag(self):
        return Flag((0, 0), self.base_class)

    # ==================== Walking ====================

    def adjacent(self, flag, label):
        target, offset = self.adjacency[flag.flag_class][label]
        return Flag(_add(flag.cell, offset), target)

    def apply_word(self, flag, word):
        """Image of `flag` under the walk spelled by `word`, letters applied left to right."""
        if isinstance(word, str):
            word = parse(word)
        (x, y), current = flag
        adjacency = self.adjacency
        for letter in word.letters:
            current, (dx, dy) = adjacency[current][letter]
            x += dx
            y += dy
        return Flag((x, y), current)

    def walk_of(self, start, word):
        if isinstance(word, str):
            word = parse(word)
        flags = [start]
        for letter in word.letters:
            flags.append(self.adjacent(flags[-1], letter))
        return Walk(tuple(flags), word)

    def fixes(self, word, flag=None):
        """True when the walk of `word` from `flag` (default Φ) returns to it."""
        flag = self.base_flag if flag is None else flag
        return self.apply_word(flag, word) == flag

    def translation_of(self, word, flag=None):
        """Lattice vector by which `word` translates `flag`, or None if it changes its class."""
        flag = self.base_flag if flag is None else flag
        image = self.apply_word(flag, word)
        if image.flag_class != flag.flag_class:
            return None
        return image.cell[0] - flag.cell[0], image.cell[1] - flag.cell[1]

    def flags_in_window(self, radius):
        """All flags whose cell lies in [-radius, radius]², in (cell, class) order."""
        return [
            Flag((x, y), c)
            for x in range(-radius, radius + 1)
            for y in range(-radius, radius + 1)
            for c in range(self.class_count)
        ]

    # ==================== Geometry ====================

    def lattice_vector(self, cell):
        (ax, ay), (bx, by) = self.basis
        m, n = cell
        return m * ax + n * bx, m * ay + n * by

    def embed(self, flag):
        """Exact flag triangle (vertex point, edge midpoint, face centroid)."""
        dx, dy = self.lattice_vector(flag.cell)
        return tuple((x + dx, y + dy) for x, y in self.triangles[flag.flag_class])

    def centroid(self, flag):
        triangle = self.embed(flag)
        return sum(p[0] for p in triangle) / 3, sum(p[1] for p in triangle) / 3

    @cached_property
    def grid_scale(self):
        """Integer scale at which every centroid, cell point and lattice vector is integral."""
        denominators = [
            value.denominator
            for triangle in self.triangles for point in triangle for value in point
        ]
        denominators += [value.denominator for vector in self.basis for value in vector]
        return 3 * lcm(*denominators)

    @cached_property
    def _grid_tables(self):
        scale = self.grid_scale
        centroids = tuple(
            (int(sum(p[0] for p in triangle) * scale) // 3, int(sum(p[1] for p in triangle) * scale) // 3)
            for triangle in self.triangles
        )
        points = tuple(tuple(self.grid_point(point) for point in triangle) for triangle in self.triangles)
        basis = tuple((int(x * scale), int(y * scale)) for x, y in self.basis)
        return centroids, points, basis

    def grid_centroid(self, flag):
        """Centroid of the flag triangle in integer grid units."""
        centroids, _, ((ax, ay), (bx, by)) = self._grid_tables
        cx, cy = centroids[flag.flag_class]
        m, n = flag.cell
        return cx + m * ax + n * bx, cy + m * ay + n * by

    def grid_point(self, point):
        scale = self.grid_scale
        return int(point[0] * scale), int(point[1] * scale)

    def grid_cell_point(self, cell):
        """Representative point of a cell in integer grid units."""
        _, points, ((ax, ay), (bx, by)) = self._grid_tables
        px, py = points[cell.anchor.flag_class][cell.kind.point_slot]
        m, n = cell.anchor.cell
        return px + m * ax + n * bx, py + m * ay + n * by

    @property
    def grid_basis(self):
        return self._grid_tables[2]

    @cached_property
    def cell_point_table(self):
        """(kind, anchor class, size, x, y) per cell orbit, with grid points in lattice cell (0, 0)."""
        _, points, _ = self._grid_tables
        table = []
        for kind in CellKind:
            _, anchors, sizes = self._cell_tables[kind]
            for anchor, size in zip(anchors, sizes):
                x, y = points[anchor][kind.point_slot]
                table.append((kind, anchor, size, x, y))
        return tuple(table)

    @cached_property
    def cell_margin(self):
        """Lattice cells to search beyond a walk's cells for points it may enclose."""
        (ax, ay), (bx, by) = self.basis
        det = ax * by - ay * bx
        reach = 0
        for triangle in self.triangles:
            for x, y in triangle:
                reach = max(reach, abs((x * by - y * bx) / det), abs((ax * y - ay * x) / det))
        return 2 * math.ceil(reach) + 1

    # ==================== Cells ====================

    @cached_property
    def _cell_tables(self):
        """Per kind: (membership[c] = (orbit, offset), anchor class per orbit, size per orbit)."""
        tables = {}
        for kind in CellKind:
            first, second = kind.labels
            membership = [None] * self.class_count
            anchors, sizes = [], []
            for start in range(self.class_count):
                if membership[start] is not None:
                    continue
                orbit = len(anchors)
                anchors.append(start)
                membership[start] = (orbit, (0, 0))
                current, offset, label, count = start, (0, 0), first, 1
                while True:
                    current, step = self.adjacency[current][label]
                    offset = _add(offset, step)
                    if current == start:
                        break
                    membership[current] = (orbit, offset)
                    count += 1
                    label = second if label == first else first
                sizes.append(count // 2)
            tables[kind] = (tuple(membership), tuple(anchors), tuple(sizes))
        return tables

    def cell_of(self, flag, kind):
        """The `kind` cell containing `flag`."""
        membership, anchors, sizes = self._cell_tables[kind]
        orbit, (dx, dy) = membership[flag.flag_class]
        anchor = Flag((flag.cell[0] - dx, flag.cell[1] - dy), anchors[orbit])
        return CellRef(kind, anchor, sizes[orbit])

    def cells_in_cell(self, kind, lattice_cell):
        """One CellRef per `kind` orbit, anchored in `lattice_cell`."""
        _, anchors, sizes = self._cell_tables[kind]
        return [CellRef(kind, Flag(lattice_cell, anchor), size) for anchor, size in zip(anchors, sizes)]

    def cell_point(self, cell):
        """Exact representative point: the tiling vertex, edge midpoint or face centroid."""
        return self.embed(cell.anchor)[cell.kind.point_slot]

    def cell_loop_walk(self, flag, kind, reverse=False):
        """Walk once around the `kind` cell of `flag`, starting at `flag`."""
        first, second = kind.labels
        if reverse:
            first, second = second, first
        size = self.cell_of(flag, kind).size
        return self.walk_of(flag, power(Word.from_labels((first, second)), size))

    @cached_property
    def face_classes(self):
        """For each class: (face orbit id, co-degree of its face)."""
        membership, _, sizes = self._cell_tables[CellKind.FACE]
        return tuple((orbit, sizes[orbit]) for orbit, _ in membership)

    def codegree(self, flag):
        return self.face_classes[flag.flag_class][1]

    @cached_property
    def vertex_degree(self):
        _, _, sizes = self._cell_tables[CellKind.VERTEX]
        return max(sizes)

    @cached_property
    def cover(self):
        """(p, q) of the regular cover: lcm of the co-degrees and the vertex degree."""
        _, _, sizes = self._cell_tables[CellKind.FACE]
        return lcm(*sizes), self.vertex_degree

    # ==================== Invariants ====================

    def defining_relations(self):
        """Relator words: ρ0ρ2 squared, (ρ0ρ1)^p and (ρ1ρ2)^q of the regular cover."""
        p, q = self.cover
        return {
            '(ac)^2': power(Word((Letter.A, Letter.C)), 2),
            f'(ab)^{p}': power(Word((Letter.A, Letter.B)), p),
            f'(bc)^{q}': power(Word((Letter.B, Letter.C)), q),
        }

    def validate(self):
        """Return a list of violated invariants; empty when the system is sound."""
        problems = []
        relations = self.defining_relations()
        for c in range(self.class_count):
            flag = Flag((0, 0), c)
            neighbours = []
            for label in range(3):
                image = self.adjacent(flag, label)
                neighbours.append(image)
                if self.adjacent(image, label) != flag:
                    problems.append(f'class {c}: reflection {label} is not an involution')
            if flag in neighbours or len(set(neighbours)) != 3:
                problems.append(f'class {c}: neighbours are not three distinct flags')
            for name, relation in relations.items():
                if not self.fixes(relation, flag):
                    problems.append(f'class {c}: relation {name} does not act trivially')
            (ax, ay), (bx, by), (cx, cy) = self.triangles[c]
            if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
                problems.append(f'class {c}: degenerate flag triangle')
        (ax, ay), (bx, by) = self.basis
        if ax * by - ay * bx == 0:
            problems.append('lattice basis is degenerate')
        if len(set(self._cell_tables[CellKind.VERTEX][2])) != 1:
            problems.append('vertices do not all have the same degree')
        return problems
