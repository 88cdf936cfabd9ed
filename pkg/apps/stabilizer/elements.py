"""
Face and vertex generators, and the conjugator-independence check.
"""
from apps.core.exceptions import LemmaPreconditionError
from apps.tilings.flags import CellKind, Flag
from apps.words import Letter, Word, concat, inverse, parse, power

FACE_ROTATION = Word((Letter.A, Letter.B))
VERTEX_ROTATION = Word((Letter.B, Letter.C))


def _word(value):
    return parse(value) if isinstance(value, str) else value


def cell_conjugate(outbound, rotation, exponent):
    """outbound · rotation^exponent · outbound⁻¹: walk out, turn around the cell, walk back."""
    return concat(outbound, power(rotation, exponent), inverse(outbound))


def make_wf(system, word):
    """
    Face generator for the face reached by `word`.

    With Ψ the image of Φ under `word` and p_f the co-degree of Ψ's face,
    returns word · (ab)^p_f · word⁻¹, which fixes Φ.
    """
    word = _word(word)
    flag = system.apply_word(system.base_flag, word)
    return cell_conjugate(word, FACE_ROTATION, system.codegree(flag))


def make_wv(system, word):
    """Vertex generator: word · (bc)^q · word⁻¹ with q the degree of the vertex reached."""
    word = _word(word)
    flag = system.apply_word(system.base_flag, word)
    return cell_conjugate(word, VERTEX_ROTATION, system.cell_of(flag, CellKind.VERTEX).size)


def conjugator_independence(system, word, other, rank, exponent=None):
    """
    Whether moving the conjugator within a shared face (rank 0) or vertex
    (rank 1) keeps a cell rotation in the stabilizer.

    The rotation is (ab)^exponent for rank 0 and (bc)^exponent for rank 1;
    the exponent defaults to the co-degree of the face (rank 0) or the
    degree of the vertex (rank 1) that `word` reaches.

    Raises:
        LemmaPreconditionError: the two flags do not share the cell, or the
            rotation conjugated by `word` does not fix Φ
    """
    if rank not in (0, 1):
        raise ValueError(f'rank must be 0 or 1, got {rank}')
    word, other = _word(word), _word(other)
    kind, rotation = (CellKind.FACE, FACE_ROTATION) if rank == 0 else (CellKind.VERTEX, VERTEX_ROTATION)
    base = system.base_flag
    first, second = system.apply_word(base, word), system.apply_word(base, other)
    if exponent is None:
        exponent = system.codegree(first) if rank == 0 else system.cell_of(first, kind).size
    if system.cell_of(first, kind) != system.cell_of(second, kind):
        raise LemmaPreconditionError(
            f'{first} and {second} do not share a {kind.value}; the conjugators are not comparable'
        )
    if not system.fixes(cell_conjugate(word, rotation, exponent)):
        raise LemmaPreconditionError(
            f'({rotation})^{exponent} conjugated by {word} does not fix the base flag'
        )
    return system.fixes(cell_conjugate(other, rotation, exponent))


def relations_act_trivially(system):
    """Map each defining relation of the regular cover to whether it fixes every flag class."""
    classes = [Flag((0, 0), c) for c in range(system.class_count)]
    return {
        name: all(system.fixes(relation, flag) for flag in classes)
        for name, relation in system.defining_relations().items()
    }
