"""
Cells enclosed by a closed walk.

A walk is drawn as the polygon through the centroids of the flags it
visits. All coordinates are integers on the flag system's grid, so the
winding number is exact.
"""
from more_itertools import pairwise

from apps.core.exceptions import WalkError
from apps.tilings.flags import CellRef, Flag


def is_left(point, start, end):
    """Positive when `point` lies left of the line from `start` to `end`, zero when on it."""
    return (end[0] - start[0]) * (point[1] - start[1]) - (point[0] - start[0]) * (end[1] - start[1])


def winding_number(point, polygon):
    """Winding number of a closed polygon (first point repeated last) around `point`."""
    winding = 0
    for start, end in pairwise(polygon):
        if start[1] <= point[1]:
            if end[1] > point[1] and is_left(point, start, end) > 0:
                winding += 1
        elif end[1] <= point[1] and is_left(point, start, end) < 0:
            winding -= 1
    return winding


def walk_polygon(system, flags):
    return [system.grid_centroid(flag) for flag in flags]


def candidate_cells(system, flags, polygon):
    """Yield (cell, grid point) for every cell whose point lies in the polygon's bounding box."""
    margin = system.cell_margin
    (ax, ay), (bx, by) = system.grid_basis
    table = system.cell_point_table
    low_x, high_x = min(p[0] for p in polygon), max(p[0] for p in polygon)
    low_y, high_y = min(p[1] for p in polygon), max(p[1] for p in polygon)
    xs = [flag.cell[0] for flag in flags]
    ys = [flag.cell[1] for flag in flags]
    for m in range(min(xs) - margin, max(xs) + margin + 1):
        for n in range(min(ys) - margin, max(ys) + margin + 1):
            ox, oy = m * ax + n * bx, m * ay + n * by
            for kind, anchor, size, px, py in table:
                x, y = px + ox, py + oy
                if low_x <= x <= high_x and low_y <= y <= high_y:
                    yield CellRef(kind, Flag((m, n), anchor), size), (x, y)


def cell_windings(system, flags):
    """Nonzero winding numbers of the closed flag sequence around cell points."""
    polygon = walk_polygon(system, flags)
    windings = {}
    for cell, point in candidate_cells(system, flags, polygon):
        winding = winding_number(point, polygon)
        if winding:
            windings[cell] = winding
    return windings


def enclosed_cells(system, walk):
    """
    Cells the closed walk winds around, with their winding numbers.

    Returns:
        list of (CellRef, winding) ordered by the cells' representative points

    Raises:
        WalkError: the walk is not closed
    """
    if not walk.is_closed:
        raise WalkError(f'walk {walk.word} from {walk.start} ends at {walk.end}; a closed walk is required')
    if len(walk) == 0:
        return []
    windings = cell_windings(system, walk.flags)
    return sorted(windings.items(), key=lambda item: system.grid_cell_point(item[0]))
