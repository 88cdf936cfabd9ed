"""
Peeling a closed walk at the base flag into conjugates of cell loops.

A closed walk is cut at its first repeated flag into a detour and a
simple cycle. A simple cycle around a single cell is that cell's loop
and is emitted as a factor. A larger one gives up an enclosed cell it
runs along: the arc it shares with the cell is swapped for the other way
around the cell, which lowers the total winding of what is left.
"""
from collections import deque
from dataclasses import dataclass

from django.conf import settings

from apps.core.exceptions import PeelError, WalkError
from apps.core.utils import timed_activity
from apps.tilings.flags import CellKind, CellRef
from apps.words import EMPTY, Word, concat, format_conjugate, free_reduce, inverse, parse

from .cells import cell_windings


@dataclass(frozen=True)
class PeelFactor:
    """outbound · loop · outbound⁻¹, where `loop` walks once around `cell`."""

    cell: CellRef
    outbound: Word
    loop: Word

    @property
    def word(self):
        return concat(self.outbound, self.loop, inverse(self.outbound))

    @property
    def expression(self):
        return format_conjugate(self.loop, inverse(self.outbound))


@dataclass(frozen=True)
class PeelSplit:
    """One cell split off a cycle, with the total |winding| before and after."""

    cell: CellRef
    before: int
    after: int


def first_repeat(flags):
    """Indices (i, j), i < j, of the first flag visited twice."""
    seen = {}
    for index, flag in enumerate(flags):
        if flag in seen:
            return seen[flag], index
        seen[flag] = index
    raise WalkError('walk never revisits a flag')


def total_winding(windings):
    return sum(abs(winding) for winding in windings.values())


def _touching_cells(system, flags, windings):
    """Enclosed cells that some flag of the cycle lies in, lowest grid point first."""
    touching = {
        system.cell_of(flag, kind) for flag in flags for kind in CellKind
    }
    return sorted((cell for cell in touching if cell in windings), key=system.grid_cell_point)


def cell_runs(system, flags, cell):
    """
    Maximal cyclic runs of a simple cycle inside `cell`.

    Args:
        flags: the cycle's distinct flags, without the closing repeat

    Yields:
        (start, steps): the run starts at flags[start] and stays in the cell for `steps` letters
    """
    inside = [system.cell_of(flag, cell.kind) == cell for flag in flags]
    count = len(flags)
    if all(inside):
        return
    for start in range(count):
        if inside[start] and not inside[start - 1]:
            steps = 0
            while inside[(start + steps + 1) % count]:
                steps += 1
            if steps:
                yield start, steps


def _split(system, cycle, flags, cell):
    """
    Swap the longest arc the cycle shares with `cell` for the rest of the cell loop.

    Returns:
        (start, loop, rest): cycle = cycle[:start] · loop · rest · cycle[:start]⁻¹
        as elements, where `rest` is closed at flags[start]; None if the cell
        offers no usable arc
    """
    for start, steps in sorted(cell_runs(system, flags, cell), key=lambda run: -run[1]):
        rotated = concat(cycle[start:], cycle[:start])
        arc = rotated[:steps]
        for reverse in (False, True):
            loop = system.cell_loop_walk(flags[start], cell.kind, reverse=reverse).word
            if loop[:steps] == arc:
                return start, loop, free_reduce(concat(inverse(loop[steps:]), rotated[steps:]))
    return None


def peel(system, word, step_limit=None, trace=None):
    """
    Decompose a closed walk at Φ into cell-loop conjugates.

    Args:
        system: FlagSystem
        word: Word or expression whose walk from Φ returns to Φ
        step_limit: work-list bound; defaults to settings.PEEL_STEP_LIMIT
        trace: optional list that receives one PeelSplit per cell split off a cycle

    Returns:
        list of PeelFactor whose product, in order, free-reduces to the reduced word

    Raises:
        WalkError: the walk does not return to Φ
        PeelError: the bound was reached, or a cycle could not be made smaller
    """
    if isinstance(word, str):
        word = parse(word)
    step_limit = step_limit or settings.PEEL_STEP_LIMIT
    root = system.base_flag
    if not system.fixes(word):
        raise WalkError(f'{word} takes the base flag to {system.apply_word(root, word)}; peeling needs a closed walk')

    factors = []
    # (detour, closed walk at the detour's end)
    pending = deque([(EMPTY, free_reduce(word))])
    steps = 0
    with timed_activity('PEEL', 'walk', f'closed walk on {system.tiling}', {'length': len(word)}) as metadata:
        while pending:
            steps += 1
            if steps > step_limit:
                raise PeelError(f'{system.tiling}: peeling did not finish within {step_limit} steps', {
                    'word': str(word),
                    'factors': len(factors),
                    'pending': [str(concat(detour, closed, inverse(detour))) for detour, closed in pending],
                })
            detour, closed = pending.popleft()
            if closed.is_empty:
                continue
            walk = system.walk_of(system.apply_word(root, detour), closed)
            i, j = first_repeat(walk.flags)
            if (i, j) != (0, len(closed)):
                # detour · cycle · detour⁻¹ first, then what is left of the walk
                pending.appendleft((detour, free_reduce(concat(closed[:i], closed[j:]))))
                pending.appendleft((free_reduce(concat(detour, closed[:i])), closed[i:j]))
                continue

            windings = cell_windings(system, walk.flags)
            if not windings:
                raise PeelError(f'{system.tiling}: cycle {closed} encloses no cell', {'cycle': str(closed)})
            if len(windings) == 1:
                (cell,) = windings
                if all(system.cell_of(flag, cell.kind) == cell for flag in walk.flags):
                    factors.append(PeelFactor(cell, detour, closed))
                    continue

            flags = walk.flags[:-1]
            before = total_winding(windings)
            for cell in _touching_cells(system, flags, windings):
                split = _split(system, closed, flags, cell)
                if split is None:
                    continue
                start, loop, rest = split
                after = total_winding(cell_windings(system, system.walk_of(flags[start], rest).flags))
                if after < before:
                    break
            else:
                raise PeelError(f'{system.tiling}: no enclosed cell of cycle {closed} lowers its winding', {
                    'cycle': str(closed),
                    'enclosed': [str(cell) for cell in windings],
                })
            if trace is not None:
                trace.append(PeelSplit(cell, before, after))
            outbound = free_reduce(concat(detour, closed[:start]))
            factors.append(PeelFactor(cell, outbound, loop))
            pending.appendleft((outbound, rest))
        metadata['factors'] = len(factors)
        metadata['steps'] = steps
    return factors


def factor_product(factors):
    """Free-reduced product of the factor words, in order."""
    return free_reduce(concat(*(factor.word for factor in factors)))
