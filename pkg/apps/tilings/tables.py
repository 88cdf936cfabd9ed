"""
Plain-text flag tables.

    flag-system 1
    tiling 4.8.8
    convention as-written
    classes 24
    base 5
    cover 8 3
    basis <t1x> <t1y> <t2x> <t2y>
    adjacency
    <class> <c0> <dx> <dy> <c1> <dx> <dy> <c2> <dx> <dy>
    triangles
    <class> <vx> <vy> <mx> <my> <fx> <fy>
    faces
    <class> <face orbit> <co-degree>
    end

Coordinates are exact fractions written as `p/q` or integers. Blank
lines and `#` comments are ignored.
"""
from fractions import Fraction

from apps.core.exceptions import TableFormatError

from .constants import TilingId
from .flags import FlagSystem
from .presentations import Convention

FORMAT_VERSION = 1
SECTIONS = ('adjacency', 'triangles', 'faces')


def _fraction(value):
    return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'


def dump_table(system):
    """Serialize a flag system; `load_table` reads the result back exactly."""
    lines = [
        f'flag-system {FORMAT_VERSION}',
        f'tiling {system.tiling.value}',
        f'convention {system.convention}',
        f'classes {system.class_count}',
        f'base {system.base_class}',
        f'cover {system.cover[0]} {system.cover[1]}',
        'basis ' + ' '.join(_fraction(value) for vector in system.basis for value in vector),
        'adjacency',
    ]
    for c, row in enumerate(system.adjacency):
        cells = ' '.join(f'{target} {dx} {dy}' for target, (dx, dy) in row)
        lines.append(f'{c} {cells}')
    lines.append('triangles')
    for c, triangle in enumerate(system.triangles):
        lines.append(f'{c} ' + ' '.join(_fraction(value) for point in triangle for value in point))
    lines.append('faces')
    for c, (orbit, codegree) in enumerate(system.face_classes):
        lines.append(f'{c} {orbit} {codegree}')
    lines.append('end')
    return '\n'.join(lines) + '\n'


class _TableReader:
    def __init__(self, text):
        self.lines = [
            (number, line.split('#', 1)[0].split())
            for number, line in enumerate(text.splitlines(), start=1)
        ]
        self.lines = [(number, fields) for number, fields in self.lines if fields]
        self.position = 0

    def next(self, keyword=None, count=None):
        if self.position >= len(self.lines):
            raise TableFormatError(f'unexpected end of table, expected {keyword or "a row"}')
        number, fields = self.lines[self.position]
        self.position += 1
        if keyword is not None and fields[0] != keyword:
            raise TableFormatError(f'expected {keyword!r}, found {fields[0]!r}', number)
        if count is not None and len(fields) != count:
            raise TableFormatError(f'expected {count} fields, found {len(fields)}', number)
        return number, fields


def _int(value, number):
    try:
        return int(value)
    except ValueError:
        raise TableFormatError(f'expected an integer, found {value!r}', number) from None


def _frac(value, number):
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise TableFormatError(f'expected a fraction, found {value!r}', number) from None


def _rows(reader, section, class_count, width):
    reader.next(section, 1)
    rows = []
    for expected in range(class_count):
        number, fields = reader.next(count=width)
        if _int(fields[0], number) != expected:
            raise TableFormatError(f'{section} rows out of order, expected class {expected}', number)
        rows.append((number, fields[1:]))
    return rows


def load_table(text):
    """Parse a flag table into a FlagSystem; raises TableFormatError on malformed input."""
    reader = _TableReader(text)
    number, fields = reader.next('flag-system', 2)
    if _int(fields[1], number) != FORMAT_VERSION:
        raise TableFormatError(f'unsupported table version {fields[1]}', number)
    number, fields = reader.next('tiling', 2)
    try:
        tiling = TilingId.parse(fields[1])
    except KeyError as exc:
        raise TableFormatError(str(exc), number) from None
    number, fields = reader.next('convention', 2)
    try:
        convention = Convention(fields[1]).value
    except ValueError:
        raise TableFormatError(f'unknown convention {fields[1]!r}', number) from None
    number, fields = reader.next('classes', 2)
    class_count = _int(fields[1], number)
    number, fields = reader.next('base', 2)
    base_class = _int(fields[1], number)
    number, fields = reader.next('cover', 3)
    cover = (_int(fields[1], number), _int(fields[2], number))
    number, fields = reader.next('basis', 5)
    values = [_frac(value, number) for value in fields[1:]]
    basis = ((values[0], values[1]), (values[2], values[3]))

    adjacency = []
    for number, fields in _rows(reader, 'adjacency', class_count, 10):
        values = [_int(value, number) for value in fields]
        row = tuple((values[k], (values[k + 1], values[k + 2])) for k in (0, 3, 6))
        if any(not 0 <= target < class_count for target, _ in row):
            raise TableFormatError('adjacency refers to an unknown class', number)
        adjacency.append(row)

    triangles = []
    for number, fields in _rows(reader, 'triangles', class_count, 7):
        values = [_frac(value, number) for value in fields]
        triangles.append(((values[0], values[1]), (values[2], values[3]), (values[4], values[5])))

    faces = []
    for number, fields in _rows(reader, 'faces', class_count, 3):
        faces.append((number, (_int(fields[0], number), _int(fields[1], number))))
    reader.next('end', 1)

    if not 0 <= base_class < class_count:
        raise TableFormatError(f'base class {base_class} out of range')
    system = FlagSystem(tiling, adjacency, triangles, basis, base_class=base_class, convention=convention)
    for c, (number, face) in enumerate(faces):
        if system.face_classes[c] != face:
            raise TableFormatError(f'face data of class {c} disagrees with the adjacency', number)
    if system.cover != cover:
        raise TableFormatError(f'cover {cover} disagrees with the adjacency, which gives {system.cover}')
    return system
