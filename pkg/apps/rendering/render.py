"""
SVG pictures of a tiling patch with highlighted walks.

Faces are drawn from their exact vertex points, every flag triangle is
shaded by its orientation, and each highlighted walk is a polyline
through the centroids of the flags it visits. The output depends only on
the RenderSpec.
"""
from dataclasses import dataclass

from django.template.loader import render_to_string

from apps.core.exceptions import RenderSpecError
from apps.core.utils import log_activity
from apps.stabilizer.catalog import catalog_for_system
from apps.tilings.builder import build
from apps.tilings.constants import TilingId
from apps.tilings.flags import CellKind, Flag
from apps.words import Word, format_compact, parse

WALK_COLOURS = ('#d62728', '#1f77b4', '#2ca02c', '#9467bd', '#ff7f0e', '#17becf', '#8c564b', '#e377c2')
PADDING = 0.5


@dataclass(frozen=True)
class RenderSpec:
    """
    What to draw.

    Attributes:
        tiling: TilingId or name
        radius: lattice cells drawn around the base flag's cell, at least 1
        highlight_walks: words or word expressions, all walked from Φ
        labels: optional label per highlighted walk; defaults to the word
        show_base_flag: mark Φ, and for uniform tilings its β and γ images
        scale: SVG units per unit edge length
        stroke_width: width of the walk polylines
    """

    tiling: TilingId
    radius: int = 2
    highlight_walks: tuple = ()
    labels: tuple = ()
    show_base_flag: bool = True
    scale: float = 40.0
    stroke_width: float = 2.0

    def __post_init__(self):
        try:
            object.__setattr__(self, 'tiling', TilingId.parse(self.tiling))
        except KeyError as exc:
            raise RenderSpecError(str(exc)) from None
        walks = tuple(parse(walk) if isinstance(walk, str) else walk for walk in self.highlight_walks)
        object.__setattr__(self, 'highlight_walks', walks)
        self.validate()

    def validate(self):
        if self.radius < 1:
            raise RenderSpecError(f'radius must be at least 1, got {self.radius}')
        if self.scale <= 0 or self.stroke_width <= 0:
            raise RenderSpecError('scale and stroke width must be positive')
        if len(self.labels) > len(self.highlight_walks):
            raise RenderSpecError(f'{len(self.labels)} labels for {len(self.highlight_walks)} walks')
        if not all(isinstance(walk, Word) for walk in self.highlight_walks):
            raise RenderSpecError('highlighted walks must be words or word expressions')

    def label(self, index):
        if index < len(self.labels):
            return self.labels[index]
        return format_compact(self.highlight_walks[index])


class _Canvas:
    """Converts exact points to SVG coordinates and tracks the drawing's extent."""

    def __init__(self, scale):
        self.scale = scale
        self.xs = []
        self.ys = []

    def point(self, point):
        x, y = float(point[0]) * self.scale, -float(point[1]) * self.scale
        self.xs.append(x)
        self.ys.append(y)
        return x, y

    def points(self, points):
        return ' '.join('%.3f,%.3f' % self.point(point) for point in points)

    def view_box(self):
        pad = PADDING * self.scale
        left, top = min(self.xs) - pad, min(self.ys) - pad
        width, height = max(self.xs) - min(self.xs) + 2 * pad, max(self.ys) - min(self.ys) + 2 * pad
        return '%.3f %.3f %.3f %.3f' % (left, top, width, height)


def _window(spec, walks):
    """Lattice-cell bounds: [-radius, radius]², grown to hold every walk."""
    low_x = low_y = -spec.radius
    high_x = high_y = spec.radius
    for walk in walks:
        for flag in walk.flags:
            low_x, high_x = min(low_x, flag.cell[0]), max(high_x, flag.cell[0])
            low_y, high_y = min(low_y, flag.cell[1]), max(high_y, flag.cell[1])
    return range(low_x, high_x + 1), range(low_y, high_y + 1)


def _face_outline(system, face):
    points = []
    for flag in system.cell_loop_walk(face.anchor, CellKind.FACE).flags[:-1]:
        vertex = system.embed(flag)[0]
        if not points or points[-1] != vertex:
            points.append(vertex)
    if len(points) > 1 and points[0] == points[-1]:
        points.pop()
    return points


def _orientation(triangle):
    (ax, ay), (bx, by), (cx, cy) = triangle
    return 'flag-positive' if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) > 0 else 'flag-negative'


def _marks(spec, system):
    if not spec.show_base_flag:
        return []
    base = system.base_flag
    marks = [('base', 'Φ', base)]
    if not system.tiling.is_regular:
        generators = catalog_for_system(system)
        marks.append(('beta', 'Φβ', system.apply_word(base, generators.beta)))
        marks.append(('gamma', 'Φγ', system.apply_word(base, generators.gamma)))
    return marks


def catalog_walks(system):
    """Highlighted walks and labels for the catalog generators of a uniform tiling: α0.., β, γ."""
    generators = catalog_for_system(system)
    walks = [alpha.word for alpha in generators.alphas] + [generators.beta, generators.gamma]
    labels = [f'α{index}' for index in range(generators.alpha_count)] + ['β', 'γ']
    return walks, labels


def render_svg(spec):
    """Render a RenderSpec as an SVG 1.1 document string."""
    system = build(spec.tiling)
    canvas = _Canvas(spec.scale)
    base = system.base_flag
    walks = [system.walk_of(base, word) for word in spec.highlight_walks]
    xs, ys = _window(spec, walks)

    faces, triangles = [], []
    for m in xs:
        for n in ys:
            for face in system.cells_in_cell(CellKind.FACE, (m, n)):
                faces.append({'points': canvas.points(_face_outline(system, face)), 'size': face.size})
            for c in range(system.class_count):
                triangle = system.embed(Flag((m, n), c))
                triangles.append({'points': canvas.points(triangle), 'css': _orientation(triangle)})

    highlighted = []
    for index, walk in enumerate(walks):
        centroids = [system.centroid(flag) for flag in walk.flags]
        x, y = canvas.point(centroids[len(centroids) // 2])
        highlighted.append({
            'points': canvas.points(centroids),
            'colour': WALK_COLOURS[index % len(WALK_COLOURS)],
            'label': spec.label(index),
            'x': '%.3f' % x,
            'y': '%.3f' % y,
        })

    marks = []
    for css, label, flag in _marks(spec, system):
        x, y = canvas.point(system.centroid(flag))
        marks.append({
            'css': css, 'label': label,
            'points': canvas.points(system.embed(flag)),
            'x': '%.3f' % x, 'y': '%.3f' % y,
        })

    document = render_to_string('rendering/tiling.svg', {
        'title': f'{system.tiling} flag patch',
        'view_box': canvas.view_box(),
        'faces': faces,
        'triangles': triangles,
        'walks': highlighted,
        'marks': marks,
        'stroke_width': '%.3f' % spec.stroke_width,
        'font_size': '%.3f' % (spec.scale * 0.3),
    })
    log_activity('RENDER', 'tiling', f'svg of {system.tiling}', {
        'radius': spec.radius, 'walks': len(walks), 'bytes': len(document),
    })
    return document
